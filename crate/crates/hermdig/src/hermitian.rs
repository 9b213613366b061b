//! The Hermitian adjacency matrix and its spectral data: exact integer
//! characteristic polynomials, numeric eigenvalues, and derived statistics.

use num_bigint::BigInt;
use serde::Serialize;

use crate::digraph::{Digraph, PairState};
use crate::jacobi;
use crate::matrix::Matrix;
use crate::poly::Poly;
use crate::scalar::{Gaussian, ExactScalar};
use crate::{CharPoly, HermitianMatrix, DEFAULT_TOL};

pub type GaussianBig = Gaussian<BigInt>;

/// Hermitian adjacency matrix over an arbitrary integer scalar: digons give 1,
/// a forward arc gives `i`, a backward arc `-i`.
pub fn hermitian_matrix_generic<T: ExactScalar>(d: &Digraph) -> Matrix<Gaussian<T>> {
    Matrix::from_fn(d.order(), |u, v| {
        if u == v {
            return Gaussian::zero();
        }
        match d.pair(u, v) {
            PairState::None => Gaussian::zero(),
            PairState::Digon => Gaussian::one(),
            PairState::Fwd => Gaussian::i(),
            PairState::Bwd => -Gaussian::i(),
        }
    })
}

pub fn hermitian_matrix(d: &Digraph) -> HermitianMatrix {
    hermitian_matrix_generic::<BigInt>(d)
}

/// Plain 0/1 adjacency matrix (not Hermitian in general).
pub fn adjacency_matrix_generic<T: ExactScalar + crate::matrix::MatScalar>(d: &Digraph) -> Matrix<T> {
    Matrix::from_fn(d.order(), |u, v| {
        if u != v && d.has_arc(u, v) {
            <T as num_traits::One>::one()
        } else {
            <T as num_traits::Zero>::zero()
        }
    })
}

/// Exact characteristic polynomial of the Hermitian adjacency matrix.
pub fn char_poly(d: &Digraph) -> CharPoly {
    gaussian_char_poly(&hermitian_matrix(d))
}

/// Faster fixed-width variant for small orders (coefficients fit easily).
pub fn char_poly_i64(d: &Digraph) -> Poly<i64> {
    debug_assert!(d.order() <= 12);
    let m = hermitian_matrix_generic::<i64>(d);
    let coeffs = m.char_poly_coeffs();
    Poly::from_coeffs(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_real(), "characteristic polynomial must be real");
                c.re
            })
            .collect(),
    )
}

/// Characteristic polynomial of a Gaussian-integer matrix whose spectrum is
/// known to be real; nonzero imaginary residue is an internal error.
pub fn gaussian_char_poly(m: &Matrix<GaussianBig>) -> CharPoly {
    let coeffs = m.char_poly_coeffs();
    Poly::from_coeffs(
        coeffs
            .into_iter()
            .map(|c| {
                assert!(c.is_real(), "characteristic polynomial must be real");
                c.re
            })
            .collect(),
    )
}

/// Exact characteristic polynomial of the 0/1 adjacency matrix `A(X)`.
pub fn adjacency_char_poly(d: &Digraph) -> CharPoly {
    let m = adjacency_matrix_generic::<BigInt>(d);
    Poly::from_coeffs(m.char_poly_coeffs())
}

pub fn adjacency_char_poly_i64(d: &Digraph) -> Poly<i64> {
    debug_assert!(d.order() <= 12);
    let m = adjacency_matrix_generic::<i64>(d);
    Poly::from_coeffs(m.char_poly_coeffs())
}

/// Exact characteristic polynomial of the underlying graph's adjacency matrix.
pub fn underlying_char_poly(d: &Digraph) -> CharPoly {
    adjacency_char_poly(&d.underlying_graph().to_digraph())
}

/// Exact `(u, v)` entry of `H(X)^k`.
pub fn power_entry(d: &Digraph, k: usize, u: usize, v: usize) -> GaussianBig {
    hermitian_matrix(d).power_entry(k, u, v)
}

/// Numeric eigenvalues of `H(X)` in descending order (full multiset).
pub fn eigenvalues_raw(d: &Digraph) -> Vec<f64> {
    let n = d.order();
    let mut re = vec![0.0; n * n];
    let mut im = vec![0.0; n * n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            match d.pair(u, v) {
                PairState::None => {}
                PairState::Digon => re[u * n + v] = 1.0,
                PairState::Fwd => im[u * n + v] = 1.0,
                PairState::Bwd => im[u * n + v] = -1.0,
            }
        }
    }
    jacobi::hermitian_eigenvalues(&re, &im, n, jacobi::default_threshold())
        .expect("jacobi converges on unit-entry hermitian input")
}

/// Spectrum with tolerance-clustered multiplicities. The multiplicity of the
/// zero eigenvalue is taken exactly from the trailing zero coefficients of
/// the characteristic polynomial, never from the numerics.
#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    /// Distinct eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Multiplicity of each distinct eigenvalue.
    pub multiplicities: Vec<usize>,
    /// Exact multiplicity of the eigenvalue 0.
    pub zero_mult: usize,
    pub tolerance: f64,
}

impl Spectrum {
    /// Expands multiplicities back to the full descending eigenvalue list.
    pub fn full(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for (v, &m) in self.eigenvalues.iter().zip(&self.multiplicities) {
            out.extend(std::iter::repeat(*v).take(m));
        }
        out
    }

    pub fn order(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn spectral_radius(&self) -> f64 {
        if self.eigenvalues.is_empty() {
            0.0
        } else {
            self.lambda_max().abs().max(self.lambda_min().abs())
        }
    }
}

/// Clusters a raw eigenvalue list against an exact zero multiplicity.
pub fn cluster_spectrum(mut raw: Vec<f64>, zero_mult: usize, tol: f64) -> Spectrum {
    assert!(tol > 0.0);
    // Snap the zero_mult smallest-magnitude values to exact zero.
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by(|&a, &b| raw[a].abs().partial_cmp(&raw[b].abs()).unwrap());
    for &k in order.iter().take(zero_mult) {
        raw[k] = 0.0;
    }
    raw.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut values: Vec<f64> = Vec::new();
    let mut mults: Vec<usize> = Vec::new();
    for v in raw {
        match values.last() {
            Some(&last) if last - v <= tol => *mults.last_mut().unwrap() += 1,
            _ => {
                values.push(v);
                mults.push(1);
            }
        }
    }
    Spectrum {
        eigenvalues: values,
        multiplicities: mults,
        zero_mult,
        tolerance: tol,
    }
}

/// Eigenvalues of `H(X)` with clustered multiplicities.
pub fn eigenvalues(d: &Digraph, tol: f64) -> Spectrum {
    let p = char_poly(d);
    cluster_spectrum(eigenvalues_raw(d), p.trailing_zero_count(), tol)
}

/// Spectral statistics; the eigenvalue sign counts are exact.
#[derive(Clone, Debug, Serialize)]
pub struct SpectralStats {
    pub lambda1: f64,
    pub lambda_n: f64,
    pub rho: f64,
    /// Number of non-negative eigenvalues (exact).
    pub eta_plus: usize,
    /// Number of non-positive eigenvalues (exact).
    pub eta_minus: usize,
    /// Exact coefficient test: `c_k = 0` whenever `n - k` is odd.
    pub symmetric_about_zero: bool,
}

pub fn spectral_stats(d: &Digraph) -> SpectralStats {
    spectral_stats_with(d, &char_poly(d), &eigenvalues(d, DEFAULT_TOL))
}

pub fn spectral_stats_with(d: &Digraph, p: &CharPoly, spec: &Spectrum) -> SpectralStats {
    let n = d.order();
    let zero = p.trailing_zero_count();
    let pos = p.positive_root_count();
    let neg = p.negative_root_count();
    debug_assert_eq!(pos + neg + zero, n);
    SpectralStats {
        lambda1: spec.lambda_max(),
        lambda_n: spec.lambda_min(),
        rho: spec.spectral_radius(),
        eta_plus: pos + zero,
        eta_minus: neg + zero,
        symmetric_about_zero: is_symmetric_about_zero(p, n),
    }
}

/// Exact test `p(t) = (-1)^n p(-t)`.
pub fn is_symmetric_about_zero(p: &CharPoly, n: usize) -> bool {
    use num_traits::Zero;
    (0..=n).all(|k| (n - k) % 2 == 0 || p.coeff(k).is_zero())
}

/// JSON spectrum report.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub hd6: String,
    /// Ascending-degree integer coefficients `c_0..c_n` (decimal strings).
    pub charpoly: Vec<String>,
    pub charpoly_plain: String,
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    pub rho: f64,
    pub lambda1: f64,
    pub eta_plus: usize,
    pub eta_minus: usize,
    pub symmetric_about_zero: bool,
    pub underlying_edges: usize,
}

pub fn spectrum_report(d: &Digraph, tol: f64) -> SpectrumReport {
    let p = char_poly(d);
    let spec = cluster_spectrum(eigenvalues_raw(d), p.trailing_zero_count(), tol);
    let stats = spectral_stats_with(d, &p, &spec);
    let n = d.order();
    SpectrumReport {
        n,
        hd6: crate::codec::encode(d).unwrap_or_else(|_| String::from("(order > 62)")),
        charpoly: (0..=n).map(|k| p.coeff(k).to_string()).collect(),
        charpoly_plain: p.to_string(),
        eigenvalues: spec.eigenvalues.clone(),
        multiplicities: spec.multiplicities.clone(),
        rho: stats.rho,
        lambda1: stats.lambda1,
        eta_plus: stats.eta_plus,
        eta_minus: stats.eta_minus,
        symmetric_about_zero: stats.symmetric_about_zero,
        underlying_edges: d.edge_count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;
    use crate::poly::int_poly;

    #[test]
    fn entry_map_on_small_cases() {
        let mut digon = Digraph::empty(2);
        digon.add_digon(0, 1);
        let h = hermitian_matrix(&digon);
        assert_eq!(h[(0, 1)], Gaussian::one());
        assert_eq!(h[(1, 0)], Gaussian::one());

        let mut arc = Digraph::empty(2);
        arc.add_arc(0, 1);
        let h = hermitian_matrix(&arc);
        assert_eq!(h[(0, 1)], Gaussian::i());
        assert_eq!(h[(1, 0)], -Gaussian::<BigInt>::i());
    }

    #[test]
    fn digraph_of_graph_has_adjacency_char_poly() {
        for fam in [
            Family::CompleteGraph(4),
            Family::CycleGraph(5),
            Family::PathGraph(4),
        ] {
            let d = fam.build().unwrap();
            assert_eq!(char_poly(&d), adjacency_char_poly(&d));
        }
    }

    #[test]
    fn known_char_polys() {
        assert_eq!(
            char_poly(&Family::K3Prime.build().unwrap()),
            int_poly(&[2, -3, 0, 1])
        );
        assert_eq!(
            char_poly(&Family::OneReversedCycle(4).build().unwrap()),
            int_poly(&[4, 0, -4, 0, 1])
        );
        assert_eq!(
            char_poly(&Family::CompleteGraph(4).build().unwrap()),
            int_poly(&[-3, -8, -6, 0, 1]) // (t-3)(t+1)^3
        );
        // Non-oriented digraph on K4 with one digon and symmetric spectrum.
        let mut d = Digraph::empty(4);
        d.add_arc(0, 1);
        d.add_arc(1, 2);
        d.add_digon(2, 3);
        d.add_arc(0, 3);
        d.add_arc(1, 3);
        d.add_arc(2, 0);
        assert_eq!(char_poly(&d), int_poly(&[5, 0, -6, 0, 1]));
    }

    #[test]
    fn known_spectra() {
        let spec = eigenvalues(&Family::OneReversedCycle(3).build().unwrap(), 1e-9);
        let want = [3f64.sqrt(), 0.0, -(3f64.sqrt())];
        for (g, w) in spec.full().iter().zip(want) {
            assert!((g - w).abs() < 1e-9);
        }

        let spec = eigenvalues(&Family::Xab(1, 3).build().unwrap(), 1e-9);
        let want = [2.0, 1.0, 0.0, 0.0, -3.0];
        for (g, w) in spec.full().iter().zip(want) {
            assert!((g - w).abs() < 1e-9);
        }
        assert_eq!(spec.zero_mult, 2);

        let spec = eigenvalues(&Family::Necklace(4).build().unwrap(), 1e-9);
        assert_eq!(spec.eigenvalues.len(), 3);
        assert_eq!(spec.multiplicities, vec![4, 4, 4]);
        assert!((spec.eigenvalues[0] - 2.0).abs() < 1e-9);
        assert_eq!(spec.zero_mult, 4);
    }

    #[test]
    fn stats_on_k3prime() {
        let stats = spectral_stats(&Family::K3Prime.build().unwrap());
        assert!((stats.lambda1 - 1.0).abs() < 1e-9);
        assert!((stats.rho - 2.0).abs() < 1e-9);
        assert!(!stats.symmetric_about_zero);
        assert_eq!(stats.eta_plus, 2);
        assert_eq!(stats.eta_minus, 1);
    }

    #[test]
    fn oriented_graphs_have_symmetric_stats() {
        for fam in [
            Family::Tournament(5),
            Family::DirectedCycle(6),
            Family::Necklace(3),
        ] {
            let stats = spectral_stats(&fam.build().unwrap());
            assert!(stats.symmetric_about_zero);
        }
    }

    #[test]
    fn disjoint_digons_spectrum() {
        let mut d = Digraph::empty(6);
        for k in 0..3 {
            d.add_digon(2 * k, 2 * k + 1);
        }
        let stats = spectral_stats(&d);
        assert_eq!(stats.eta_plus, 3);
        assert_eq!(stats.eta_minus, 3);
        assert!((stats.rho - 1.0).abs() < 1e-9);
    }

    #[test]
    fn necklace_cube_identity() {
        let d = Family::Necklace(5).build().unwrap();
        let h = hermitian_matrix(&d);
        for u in 0..d.order() {
            for v in 0..d.order() {
                let cubed = h.power_entry(3, u, v);
                let four = h[(u, v)].clone() * Gaussian::from_parts_i8(4, 0);
                assert_eq!(cubed, four);
            }
        }
    }

    #[test]
    fn square_diagonal_gives_degrees() {
        let d = Family::Xab(2, 3).build().unwrap();
        let prof = d.degree_profile();
        for u in 0..d.order() {
            assert_eq!(
                power_entry(&d, 2, u, u),
                Gaussian::new(BigInt::from(prof.degree[u]), BigInt::from(0))
            );
        }
    }

    #[test]
    fn acyclic_adjacency_is_nilpotent() {
        let mut p3 = Digraph::empty(3);
        p3.add_arc(0, 1);
        p3.add_arc(1, 2);
        assert_eq!(adjacency_char_poly(&p3), int_poly(&[0, 0, 0, 1]));
        let mut p3b = Digraph::empty(3);
        p3b.add_arc(1, 0);
        p3b.add_arc(1, 2);
        assert_eq!(adjacency_char_poly(&p3b), int_poly(&[0, 0, 0, 1]));
    }

    #[test]
    fn forest_hermitian_matches_underlying() {
        // Any orientation/digon pattern on a forest is cospectral with it.
        let mut d = Digraph::empty(5);
        d.add_arc(0, 1);
        d.add_digon(1, 2);
        d.add_arc(3, 1);
        d.add_arc(2, 4);
        assert_eq!(char_poly(&d), underlying_char_poly(&d));
    }

    #[test]
    fn char_poly_fast_path_agrees() {
        let d = Family::K4Prime.build().unwrap();
        assert_eq!(char_poly(&d).to_i64().unwrap(), char_poly_i64(&d));
    }

    #[test]
    fn trace_coefficient_invariants() {
        for fam in [Family::Xab(2, 2), Family::K4Prime, Family::Tournament(5)] {
            let d = fam.build().unwrap();
            let p = char_poly(&d);
            let n = d.order();
            assert!(p.is_monic());
            assert_eq!(p.coeff(n - 1), BigInt::from(0));
            assert_eq!(p.coeff(n - 2), BigInt::from(-(d.edge_count() as i64)));
        }
    }
}
