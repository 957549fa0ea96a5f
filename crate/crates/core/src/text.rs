//! Small helpers shared by the line-oriented text formats.

use std::collections::BTreeMap;

use crate::error::{parse_err, Result};

/// Non-empty lines with their 1-based line numbers; `#` starts a comment.
pub(crate) fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

/// Parses `keyword a=1 b=2 ...` into a key/value map.
pub(crate) fn header_fields(
    line_no: usize,
    line: &str,
    keyword: &str,
) -> Result<BTreeMap<String, String>> {
    let mut toks = line.split_whitespace();
    if toks.next() != Some(keyword) {
        return parse_err(line_no, format!("expected `{keyword}` header"));
    }
    let mut map = BTreeMap::new();
    for t in toks {
        match t.split_once('=') {
            Some((k, v)) => {
                map.insert(k.to_string(), v.to_string());
            }
            None => return parse_err(line_no, format!("malformed field `{t}`")),
        }
    }
    Ok(map)
}

pub(crate) fn field_usize(
    line_no: usize,
    map: &BTreeMap<String, String>,
    key: &str,
) -> Result<usize> {
    match map.get(key) {
        Some(v) => match v.parse() {
            Ok(x) => Ok(x),
            Err(_) => parse_err(line_no, format!("field `{key}` is not a number")),
        },
        None => parse_err(line_no, format!("missing field `{key}`")),
    }
}

/// Formats a sorted set of integers as `{1,2,3}`.
pub fn fmt_set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
