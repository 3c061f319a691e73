//! The `.fam` text format.
//!
//! ```text
//! # comment
//! 6 3
//! 1 2 3
//! 1 2 4
//! ```
//!
//! The first data line is `n k`; every further data line is a strictly
//! increasing list of `k` vertex labels. Blank lines are ignored.

use std::fmt::Write as _;

use super::family::UniformFamily;
use super::vertex_set::{VertexSet, MAX_VERTEX};
use crate::error::{Error, Result};

pub fn parse_fam(text: &str) -> Result<UniformFamily> {
    let mut header: Option<(u32, u32)> = None;
    let mut sets: Vec<(usize, VertexSet)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Load {
                    line: line_no,
                    msg: format!("`{tok}` is not a non-negative integer"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        let Some((n, k)) = header else {
            let [n, k] = nums[..] else {
                return Err(load(line_no, "header must be `n k`"));
            };
            if n > MAX_VERTEX {
                return Err(load(line_no, &format!("n = {n} exceeds {MAX_VERTEX}")));
            }
            if k > n {
                return Err(load(line_no, &format!("k = {k} exceeds n = {n}")));
            }
            header = Some((n, k));
            continue;
        };
        if nums.len() != k as usize {
            return Err(load(line_no, &format!("expected {k} vertices, found {}", nums.len())));
        }
        if nums.windows(2).any(|w| w[0] >= w[1]) {
            return Err(load(line_no, "vertices must be strictly increasing"));
        }
        if let Some(v) = nums.iter().find(|&&v| v == 0 || v > n) {
            return Err(load(line_no, &format!("vertex {v} outside 1..={n}")));
        }
        sets.push((line_no, nums.into_iter().collect()));
    }
    let Some((n, k)) = header else {
        return Err(load(0, "missing `n k` header"));
    };
    let mut sorted = sets.clone();
    sorted.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    if let Some(w) = sorted.windows(2).find(|w| w[0].1 == w[1].1) {
        return Err(load(w[1].0, &format!("duplicate set {} (first on line {})", w[1].1, w[0].0)));
    }
    UniformFamily::new(n, k, sets.into_iter().map(|(_, s)| s).collect())
}

pub fn render_fam(f: &UniformFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", f.n(), f.k());
    for s in f.iter() {
        let line: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

fn load(line: usize, msg: &str) -> Error {
    Error::Load { line, msg: msg.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::vs;

    #[test]
    fn parses_with_comments() {
        let f = parse_fam("# star\n5 2\n\n1 3\n1 2\n# tail\n").unwrap();
        assert_eq!((f.n(), f.k()), (5, 2));
        assert_eq!(f.sets(), &[vs(&[1, 2]), vs(&[1, 3])]);
        assert_eq!(parse_fam(&render_fam(&f)).unwrap(), f);
    }

    #[test]
    fn load_errors_carry_lines() {
        let dup = parse_fam("4 2\n1 2\n3 4\n1 2\n").unwrap_err();
        assert_eq!(dup, Error::Load { line: 4, msg: "duplicate set {1,2} (first on line 2)".into() });
        assert!(matches!(parse_fam("4 2\n2 1\n"), Err(Error::Load { line: 2, .. })));
        assert!(matches!(parse_fam("4 2\n1 2 3\n"), Err(Error::Load { line: 2, .. })));
        assert!(matches!(parse_fam("4 2\n1 x\n"), Err(Error::Load { line: 2, .. })));
        assert!(matches!(parse_fam("4\n"), Err(Error::Load { line: 1, .. })));
        assert!(matches!(parse_fam("4 2\n1 5\n"), Err(Error::Load { line: 2, .. })));
        assert!(matches!(parse_fam("# only comments\n"), Err(Error::Load { .. })));
    }
}
