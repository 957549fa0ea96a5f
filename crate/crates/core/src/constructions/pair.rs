use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// The pair coloring (n-1, psi) with psi({x, y}) = chi({x, y, n}).
pub fn slice_to_pair_coloring(c: &Coloring) -> Result<Coloring> {
    if c.k() != 3 || c.n() < 2 {
        return Err(Error::InvalidArgument("slicing needs k = 3 and n >= 2".into()));
    }
    let n = c.n();
    Coloring::from_fn(2, c.l(), n - 1, |e| c.color(&[e[0], e[1], n]))
}

/// Pair colorings of [3r] in which no triple {3i-2, 3i-1, 3i} spans a
/// monochromatic triangle.
pub fn is_pair_wealthy_type2(psi: &Coloring, r: usize) -> bool {
    psi.k() == 2
        && psi.n() == 3 * r
        && (1..=r).all(|i| {
            let (a, b, c) = (3 * i - 2, 3 * i - 1, 3 * i);
            let cols = [psi.color(&[a, b]), psi.color(&[a, c]), psi.color(&[b, c])];
            !(cols[0] == cols[1] && cols[1] == cols[2])
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::make_wealthy;
    use crate::lcg::Lcg64;
    use crate::structure::{Variant, WealthyFamily};

    #[test]
    fn constant_slices_to_constant() {
        let c = Coloring::constant(3, 2, 6, 0).unwrap();
        assert_eq!(slice_to_pair_coloring(&c).unwrap(), Coloring::constant(2, 2, 5, 0).unwrap());
    }

    #[test]
    fn single_marked_edge() {
        let mut c = Coloring::constant(3, 2, 4, 0).unwrap();
        c.set(&[1, 2, 4], 1).unwrap();
        let psi = slice_to_pair_coloring(&c).unwrap();
        assert_eq!(psi.color(&[1, 2]), 1);
        assert_eq!(psi.color(&[1, 3]), 0);
        assert_eq!(psi.color(&[2, 3]), 0);
    }

    #[test]
    fn distinct_slices_mean_distinct_colorings() {
        let mut g = Lcg64::new(4);
        for _ in 0..200 {
            let c1 = Coloring::from_fn(3, 2, 6, |_| g.bit() as u8).unwrap();
            let c2 = Coloring::from_fn(3, 2, 6, |_| g.bit() as u8).unwrap();
            if slice_to_pair_coloring(&c1).unwrap() != slice_to_pair_coloring(&c2).unwrap() {
                assert_ne!(c1, c2);
            }
        }
    }

    #[test]
    fn w33_slices_are_type2() {
        for r in 1..=4 {
            for v in WealthyFamily::W33.variants() {
                if v.rev[0] {
                    continue;
                }
                let c = make_wealthy(WealthyFamily::W33, r, &v, 1).unwrap();
                assert!(is_pair_wealthy_type2(&slice_to_pair_coloring(&c).unwrap(), r));
            }
        }
        let plain = Variant::parse(WealthyFamily::W33, "swap:0,rev:0,perm:1").unwrap();
        assert_eq!(plain, WealthyFamily::W33.plain());
    }
}
