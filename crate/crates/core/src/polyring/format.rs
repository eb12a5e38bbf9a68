use std::fmt::Write;

use super::Polynomial;
use crate::scalar::Scalar;

/// Variable names: `x, y, z` for `n <= 3`, otherwise `x1 .. xn`.
pub(crate) fn var_name(n: usize, i: usize) -> String {
    if n <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub(super) fn to_expression<S: Scalar>(p: &Polynomial<S>) -> String {
    let terms = p.canonical_terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let n = p.spatial_dim();
    let mut out = String::new();
    for (idx, (e, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        match (idx, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mut factors = Vec::new();
        if e.t_exp > 0 {
            factors.push(power("t", e.t_exp));
        }
        for (i, &a) in e.space_exps.iter().enumerate() {
            if a > 0 {
                factors.push(power(&var_name(n, i), a));
            }
        }
        let mag = c.magnitude_text();
        let unit = mag == "1" || mag == "1.0";
        if factors.is_empty() {
            out.push_str(&mag);
        } else {
            if !unit {
                let _ = write!(out, "{mag}*");
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

fn power(name: &str, e: u32) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}
