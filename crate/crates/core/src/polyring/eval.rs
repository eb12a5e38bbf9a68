use super::{PolyError, Polynomial};
use crate::scalar::Scalar;

/// A point `(x1, ..., xn, t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point<S> {
    pub coords: Vec<S>,
}

impl<S> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Self { coords }
    }
}

impl<S: Scalar> Polynomial<S> {
    pub fn evaluate(&self, pt: &Point<S>) -> Result<S, PolyError> {
        self.evaluate_slice(&pt.coords)
    }

    /// Evaluates at `(x1, ..., xn, t)` given as a slice.
    pub fn evaluate_slice(&self, coords: &[S]) -> Result<S, PolyError> {
        let n = self.spatial_dim();
        if coords.len() != n + 1 {
            return Err(PolyError::DimensionMismatch { left: n + 1, right: coords.len() });
        }
        let mut powers: Vec<Vec<S>> = coords.iter().map(|v| vec![S::one(), v.clone()]).collect();
        let mut acc = S::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            let exps = e.space_exps.iter().copied().chain(std::iter::once(e.t_exp));
            for (axis, a) in exps.enumerate() {
                if a == 0 {
                    continue;
                }
                let table = &mut powers[axis];
                while table.len() <= a as usize {
                    let next = table[table.len() - 1].clone() * table[1].clone();
                    table.push(next);
                }
                term = term * table[a as usize].clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Double-precision Horner evaluation at `(x1, ..., xn, t)`.
    pub fn evaluate_float(&self, coords: &[f64]) -> Result<f64, PolyError> {
        let n = self.spatial_dim();
        if coords.len() != n + 1 {
            return Err(PolyError::DimensionMismatch { left: n + 1, right: coords.len() });
        }
        Ok(FloatEvaluator::new(self).eval(coords))
    }
}

/// Nested Horner scheme compiled from a polynomial, outermost in `t`, then
/// `x1, ..., xn`. Reuse it when evaluating many points.
#[derive(Debug, Clone)]
pub struct FloatEvaluator {
    n: usize,
    root: Node,
}

#[derive(Debug, Clone)]
enum Node {
    Const(f64),
    /// Coefficients of increasing powers of one variable (a point index).
    Horner { axis: usize, coeffs: Vec<Node> },
}

impl FloatEvaluator {
    pub fn new<S: Scalar>(p: &Polynomial<S>) -> Self {
        let n = p.spatial_dim();
        // Each term as exponents in evaluation order: t first, then x1..xn.
        let terms: Vec<(Vec<u32>, f64)> = p
            .terms()
            .map(|(e, c)| {
                let mut exps = Vec::with_capacity(n + 1);
                exps.push(e.t_exp);
                exps.extend_from_slice(&e.space_exps);
                (exps, c.to_f64())
            })
            .collect();
        Self { n, root: build(&terms, 0, n) }
    }

    pub fn spatial_dim(&self) -> usize {
        self.n
    }

    /// `coords` is `(x1, ..., xn, t)`; no length check.
    pub fn eval(&self, coords: &[f64]) -> f64 {
        eval_node(&self.root, coords)
    }
}

fn axis_for_level(level: usize, n: usize) -> usize {
    if level == 0 {
        n
    } else {
        level - 1
    }
}

fn build(terms: &[(Vec<u32>, f64)], level: usize, n: usize) -> Node {
    if level == n + 1 {
        return Node::Const(terms.iter().map(|t| t.1).sum());
    }
    let max = terms.iter().map(|t| t.0[level]).max().unwrap_or(0);
    if max == 0 {
        return build(terms, level + 1, n);
    }
    let mut buckets: Vec<Vec<(Vec<u32>, f64)>> = vec![Vec::new(); max as usize + 1];
    for t in terms {
        buckets[t.0[level] as usize].push(t.clone());
    }
    let coeffs = buckets.iter().map(|b| build(b, level + 1, n)).collect();
    Node::Horner { axis: axis_for_level(level, n), coeffs }
}

fn eval_node(node: &Node, coords: &[f64]) -> f64 {
    match node {
        Node::Const(c) => *c,
        Node::Horner { axis, coeffs } => {
            let v = coords[*axis];
            coeffs.iter().rev().fold(0.0, |acc, c| acc * v + eval_node(c, coords))
        }
    }
}
