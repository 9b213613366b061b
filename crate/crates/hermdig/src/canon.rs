//! Canonical labelling and isomorphism testing for small digraphs.
//!
//! The canonical form of a digraph is the relabelling minimizing its hd6
//! pair-state sequence over all vertex permutations. This is exponential and
//! gated to order <= 8; the census generator uses a separate colex-ordered
//! canonicity test that never materializes all permutations.

use thiserror::Error;

use crate::digraph::Digraph;

pub const MAX_CANON_ORDER: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical form is gated to order <= {max}, got {got}")]
    OrderTooLarge { max: usize, got: usize },
}

fn hd6_pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            out.push((i, j));
        }
    }
    out
}

/// Pair-state codes in hd6 order under the identity labelling.
fn code_of(d: &Digraph, pairs: &[(usize, usize)], sigma: &[usize]) -> Vec<u8> {
    pairs
        .iter()
        .map(|&(i, j)| d.pair(sigma[i], sigma[j]).code())
        .collect()
}

/// Minimal hd6 pair-state sequence over all relabellings, together with the
/// permutation achieving it (`sigma[new] = old`).
fn min_code_and_perm(d: &Digraph) -> Result<(Vec<u8>, Vec<usize>), CanonError> {
    let n = d.order();
    if n > MAX_CANON_ORDER {
        return Err(CanonError::OrderTooLarge {
            max: MAX_CANON_ORDER,
            got: n,
        });
    }
    let pairs = hd6_pair_list(n);
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut best = code_of(d, &pairs, &sigma);
    let mut best_sigma = sigma.clone();
    // Heap's algorithm over sigma.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                sigma.swap(0, i);
            } else {
                sigma.swap(c[i], i);
            }
            let mut smaller = false;
            let mut decided = false;
            for (k, &(a, b)) in pairs.iter().enumerate() {
                let code = d.pair(sigma[a], sigma[b]).code();
                if code != best[k] {
                    smaller = code < best[k];
                    decided = true;
                    break;
                }
            }
            if decided && smaller {
                best = code_of(d, &pairs, &sigma);
                best_sigma = sigma.clone();
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok((best, best_sigma))
}

/// Canonical representative of the isomorphism class.
pub fn canonical_form(d: &Digraph) -> Result<Digraph, CanonError> {
    let n = d.order();
    let (_, sigma) = min_code_and_perm(d)?;
    let mut perm = vec![0usize; n];
    for (new, &old) in sigma.iter().enumerate() {
        perm[old] = new;
    }
    Ok(d.apply_perm(&perm))
}

/// hd6 string of the canonical form.
pub fn canonical_hd6(d: &Digraph) -> Result<String, CanonError> {
    let canon = canonical_form(d)?;
    Ok(crate::codec::encode(&canon).expect("canonical order fits hd6"))
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> Result<bool, CanonError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if sorted_degree_triples(a) != sorted_degree_triples(b) {
        return Ok(false);
    }
    Ok(min_code_and_perm(a)?.0 == min_code_and_perm(b)?.0)
}

fn sorted_degree_triples(d: &Digraph) -> Vec<(usize, usize, usize)> {
    let p = d.degree_profile();
    let mut t: Vec<_> = (0..d.order())
        .map(|v| (p.degree[v], p.in_degree[v], p.out_degree[v]))
        .collect();
    t.sort_unstable();
    t
}
