//! Named base patterns. Each builder emits the center trace only: degree-one
//! vertices are left to the expansion, so `matching(t)` is `t·∅`.

use super::pattern::BasePattern;
use crate::error::{arg, Result};
use crate::setfam::{VertexSet, MAX_VERTEX};

pub fn matching(t: u32) -> Result<BasePattern> {
    if t == 0 {
        return arg("matching(t) needs t >= 1");
    }
    Ok(BasePattern::new(vec![VertexSet::EMPTY; t as usize])?.named(format!("matching({t})")))
}

/// `e_i ∩ e_{i+1} = {i}`; consecutive edges share one vertex, the rest are disjoint.
pub fn path(t: u32) -> Result<BasePattern> {
    if t == 0 {
        return arg("path(t) needs t >= 1");
    }
    check_labels(t)?;
    let edges = (1..=t)
        .map(|i| {
            let mut e = VertexSet::EMPTY;
            if i > 1 {
                e.insert(i - 1);
            }
            if i < t {
                e.insert(i);
            }
            e
        })
        .collect();
    Ok(BasePattern::new(edges)?.named(format!("path({t})")))
}

/// A `(t-1)`-path closed by an edge meeting `e_1` and `e_{t-1}` in one new vertex each.
pub fn cycle(t: u32) -> Result<BasePattern> {
    if t < 3 {
        return arg(format!("cycle(t) needs t >= 3, got {t}"));
    }
    check_labels(t)?;
    // e_i = {i-1, i} with e_1 = {t, 1}
    let edges = (1..=t)
        .map(|i| {
            let prev = if i == 1 { t } else { i - 1 };
            VertexSet::singleton(prev).with(i)
        })
        .collect::<Vec<_>>();
    // rotate so that e_t is the closing edge {t-1, t}... keep e_1 = {t,1}, e_i = {i-1,i}
    Ok(BasePattern::new(edges)?.named(format!("cycle({t})")))
}

/// Edges `[d+1] \ {i}` for `i = 1..d+1`.
pub fn special_simplex(d: u32) -> Result<BasePattern> {
    if d == 0 {
        return arg("special-simplex(d) needs d >= 1");
    }
    check_labels(d + 1)?;
    let all = VertexSet::full(d + 1);
    let edges = (1..=d + 1).map(|i| all.without(i)).collect();
    Ok(BasePattern::new(edges)?.named(format!("special-simplex({d})")))
}

/// Two edges meeting in exactly `t-1` vertices: `2·{[t-1]}`.
pub fn one_intersection(t: u32) -> Result<BasePattern> {
    if t == 0 {
        return arg("one-intersection(t) needs t >= 1");
    }
    check_labels(t)?;
    let core = VertexSet::full(t - 1);
    Ok(BasePattern::new(vec![core, core])?.named(format!("one-intersection({t})")))
}

/// The six-edge base `{12, 14, 15, 26, 27, 3}` whose `(2,1)`-star is inclusion-maximal but not extremal.
pub fn porcupine_counterexample() -> BasePattern {
    use crate::setfam::vs;
    BasePattern::new(vec![
        vs(&[1, 2]),
        vs(&[1, 4]),
        vs(&[1, 5]),
        vs(&[2, 6]),
        vs(&[2, 7]),
        vs(&[3]),
    ])
    .expect("non-empty")
}

/// Every named builder at small parameters; used by the stability and oracle suites.
pub fn builtin_patterns(max_h: usize) -> Vec<BasePattern> {
    let mut out = Vec::new();
    for t in 1..=max_h as u32 {
        out.push(matching(t).unwrap());
        out.push(path(t).unwrap());
        if t >= 3 {
            out.push(cycle(t).unwrap());
        }
        if (t as usize) < max_h {
            out.push(special_simplex(t).unwrap());
        }
    }
    for t in 1..=3 {
        if max_h >= 2 {
            out.push(one_intersection(t).unwrap());
        }
    }
    out.retain(|p| p.h() <= max_h);
    out
}

fn check_labels(top: u32) -> Result<()> {
    if top > MAX_VERTEX {
        return arg(format!("pattern needs {top} labels, more than {MAX_VERTEX}"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfam::vs;

    #[test]
    fn builder_shapes() {
        assert_eq!(special_simplex(2).unwrap().edges(), &[vs(&[2, 3]), vs(&[1, 3]), vs(&[1, 2])]);
        assert_eq!(matching(3).unwrap().edges(), &[VertexSet::EMPTY; 3]);
        assert_eq!(path(1).unwrap().edges(), &[VertexSet::EMPTY]);
        assert_eq!(path(2).unwrap().edges(), &[vs(&[1]), vs(&[1])]);
        assert_eq!(
            cycle(4).unwrap().edges(),
            &[vs(&[4, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]
        );
        assert_eq!(one_intersection(1).unwrap().edges(), &[VertexSet::EMPTY; 2]);
        assert!(cycle(2).is_err());
        assert!(matching(0).is_err());
    }

    #[test]
    fn path_intersections_follow_definition() {
        for t in 1..=6 {
            let p = path(t).unwrap();
            let e = p.edges();
            for i in 0..e.len() {
                for j in 0..e.len() {
                    if i == j {
                        continue;
                    }
                    let want = if i.abs_diff(j) == 1 { 1 } else { 0 };
                    assert_eq!(e[i].intersection(e[j]).len(), want);
                }
            }
        }
    }

    #[test]
    fn builtins_respect_edge_limit() {
        let b = builtin_patterns(4);
        assert!(b.iter().all(|p| p.h() <= 4));
        assert!(b.iter().any(|p| p.name() == Some("cycle(4)")));
        assert!(b.iter().any(|p| p.name() == Some("special-simplex(3)")));
    }
}
