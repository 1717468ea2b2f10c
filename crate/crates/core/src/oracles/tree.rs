use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graded::Params;
use crate::linalg::SpanBuilder;
use crate::oracles::lie::{weights_of_total, FreeLie, MultigradedDims};

/// Free Lie algebra on the desuspended sphere classes `|x_i| = d - m_i - 2`.
pub fn sphere_lie(params: &Params) -> Result<FreeLie> {
    FreeLie::new(params.m.iter().map(|m| params.d - m - 2).collect())
}

/// Degree at which the tree part of multidegree `s` is concentrated.
pub fn tree_degree(params: &Params, s: &[usize]) -> i64 {
    let raw: i64 = params.m.iter().zip(s).map(|(m, &k)| (params.d - m - 2) * k as i64).sum();
    raw - (params.d - 3)
}

/// Genus-zero homology of the hairy complex with hair multidegree `s`,
/// predicted from the kernel of `x_i (x) f -> [x_i, f]` on the free Lie
/// algebra of the sphere classes.
pub fn tree_homology_oracle(params: &Params, s: &[usize]) -> Result<MultigradedDims> {
    if s.len() != params.r() {
        return Err(Error::InvalidInput(format!(
            "hair vector {s:?} does not match {} colors",
            params.r()
        )));
    }
    if s.iter().sum::<usize>() == 0 {
        return Err(Error::InvalidInput("tree oracle needs at least one hair".into()));
    }
    let lie = sphere_lie(params)?;
    let mut domain = 0usize;
    let mut span = SpanBuilder::new();
    for i in 0..s.len() {
        if s[i] == 0 {
            continue;
        }
        let mut rest = s.to_vec();
        rest[i] -= 1;
        let x = lie.generator(i)?;
        for f in lie.basis(&rest)? {
            domain += 1;
            span.insert(lie.bracket(&x, &f).words);
        }
    }
    let mut out = MultigradedDims::new();
    out.add(s.to_vec(), tree_degree(params, s), domain - span.rank());
    Ok(out)
}

/// Rational rank of the kernel of `(a_i) -> sum [x_i, a_i]` where `a_i` runs
/// over the degree `m_i - 1` part of the free Lie algebra on the sphere
/// classes.
pub fn whitehead_kernel_dim(params: &Params) -> Result<usize> {
    if !params.in_theorem_range() {
        return Err(Error::OutOfRange(format!(
            "codimension {} is at most 2",
            params.codimension()
        )));
    }
    let lie = sphere_lie(params)?;
    let r = params.r();
    let min_deg = lie.degrees().iter().copied().min().unwrap_or(1);
    let mut by_degree: HashMap<i64, Vec<Vec<usize>>> = HashMap::new();
    let max_target = params.m.iter().map(|m| m - 1).max().unwrap_or(0);
    if max_target >= 1 {
        let max_weight = (max_target / min_deg) as usize;
        for n in 1..=max_weight {
            for w in weights_of_total(r, n) {
                by_degree.entry(lie.degree_of_weight(&w)).or_default().push(w);
            }
        }
    }
    let mut domain = 0usize;
    let mut span = SpanBuilder::new();
    for (i, m) in params.m.iter().enumerate() {
        let x = lie.generator(i)?;
        for w in by_degree.get(&(m - 1)).into_iter().flatten() {
            for a in lie.basis(w)? {
                domain += 1;
                span.insert(lie.bracket(&x, &a).words);
            }
        }
    }
    Ok(domain - span.rank())
}
