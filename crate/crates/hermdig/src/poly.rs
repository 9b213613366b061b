//! Dense univariate polynomials over an exact scalar.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros
//! (the zero polynomial is the empty vector). The generic layer covers ring
//! arithmetic; field-only routines (division, gcd, Sturm chains, Yun
//! square-free decomposition) are implemented for [`BigRational`], and the
//! integer-only routines (divisibility by monic factors, irreducibility over
//! the rationals) for [`BigInt`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::ExactScalar;

/// Ring scalar usable as a polynomial coefficient.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
{
    fn from_usize(v: usize) -> Self;
}

impl Coeff for i64 {
    fn from_usize(v: usize) -> Self {
        v as i64
    }
}

impl Coeff for BigInt {
    fn from_usize(v: usize) -> Self {
        BigInt::from(v)
    }
}

impl Coeff for BigRational {
    fn from_usize(v: usize) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::from_coeffs(vec![T::one()])
    }

    /// Ascending-degree coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn monomial(coeff: T, degree: usize) -> Self {
        if coeff.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = coeff;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_usize(k))
            .collect();
        Poly::from_coeffs(out)
    }

    /// `p(-t)`.
    pub fn reflect(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
            .collect();
        Poly::from_coeffs(out)
    }

    /// Number of trailing zero coefficients, i.e. the exponent of `t`
    /// dividing the polynomial. Zero polynomial reports 0.
    pub fn trailing_zero_count(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divide out `t^k`; panics if the low-order coefficients are nonzero.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        Poly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }
}

impl<T: Coeff> std::ops::Mul<usize> for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, k: usize) -> Poly<T> {
        self.scale(&T::from_usize(k))
    }
}

// ---------------------------------------------------------------------------
// Rational-coefficient routines: division, gcd, Sturm chains, Yun.
// ---------------------------------------------------------------------------

pub type RationalPoly = Poly<BigRational>;

impl Poly<BigRational> {
    /// Euclidean division; `rhs` must be nonzero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let drhs = rhs.degree().unwrap();
        let lead_inv = BigRational::one() / rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < drhs + 1 {
            return (Poly::zero(), self.clone());
        }
        let mut quo = vec![BigRational::zero(); rem.len() - drhs];
        for k in (drhs..rem.len()).rev() {
            let q = rem[k].clone() * lead_inv.clone();
            if q.is_zero() {
                continue;
            }
            quo[k - drhs] = q.clone();
            for (j, c) in rhs.coeffs.iter().enumerate() {
                let idx = k - drhs + j;
                rem[idx] = rem[idx].clone() - q.clone() * c.clone();
            }
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = BigRational::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun square-free decomposition: returns pairs `(factor, multiplicity)`
    /// with the factors monic, square-free and pairwise coprime, so that the
    /// input equals `lc * prod factor^multiplicity`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        if self.degree().map_or(true, |d| d == 0) {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let d = f.gcd(&df);
        if d.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_rem(&d).0;
        let c = df.div_rem(&d).0;
        let mut e = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().map_or(false, |deg| deg > 0) {
            let a = b.gcd(&e);
            if a.degree().map_or(false, |deg| deg > 0) {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            let cnew = e.div_rem(&a).0;
            e = cnew.sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Sturm chain with sign-preserving normalization of each element.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = Vec::new();
        if self.is_zero() {
            return chain;
        }
        chain.push(normalize_positive(self));
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(normalize_positive(&d));
        loop {
            let k = chain.len();
            let rem = chain[k - 2].div_rem(&chain[k - 1]).1;
            if rem.is_zero() {
                break;
            }
            chain.push(normalize_positive(&rem.neg()));
        }
        chain
    }

    /// A rational bound `B` with all real roots in `(-B, B)`.
    pub fn root_bound(&self) -> BigRational {
        match self.degree() {
            None | Some(0) => BigRational::one(),
            Some(_) => {
                let lc = self.leading().unwrap().clone();
                let mut m = BigRational::zero();
                for c in &self.coeffs[..self.coeffs.len() - 1] {
                    let a = (c.clone() / lc.clone()).abs();
                    if a > m {
                        m = a;
                    }
                }
                m + BigRational::one() + BigRational::one()
            }
        }
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    /// Requires `p(a) != 0` and `p(b) != 0`.
    pub fn count_distinct_roots_open(&self, a: &BigRational, b: &BigRational) -> usize {
        assert!(a < b);
        assert!(!self.eval(a).is_zero() && !self.eval(b).is_zero());
        let chain = self.sturm_chain();
        let va = sign_variations(&chain, a);
        let vb = sign_variations(&chain, b);
        va - vb
    }

    /// Number of real roots counted with multiplicity in the open interval
    /// `(a, b)`; endpoint roots are excluded and allowed.
    pub fn count_roots_with_multiplicity_open(&self, a: &BigRational, b: &BigRational) -> usize {
        let mut total = 0;
        for (factor, mult) in self.squarefree_decomposition() {
            let mut f = factor;
            // Nudge endpoint roots out of the square-free factor so the Sturm
            // endpoints stay regular.
            for pt in [a, b] {
                while f.eval(pt).is_zero() {
                    let lin = Poly::from_coeffs(vec![-pt.clone(), BigRational::one()]);
                    f = f.div_rem(&lin).0;
                }
            }
            if f.degree().map_or(true, |d| d == 0) {
                continue;
            }
            total += mult * f.count_distinct_roots_open(a, b);
        }
        total
    }
}

fn normalize_positive(p: &Poly<BigRational>) -> Poly<BigRational> {
    match p.leading() {
        None => Poly::zero(),
        Some(lc) => {
            let scale = BigRational::one() / lc.abs();
            p.scale(&scale)
        }
    }
}

fn sign_variations(chain: &[Poly<BigRational>], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut variations = 0;
    for p in chain {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                variations += 1;
            }
        }
        last = Some(pos);
    }
    variations
}

// ---------------------------------------------------------------------------
// Integer-coefficient routines.
// ---------------------------------------------------------------------------

/// Monic integer polynomial with exact coefficients; the cospectrality key.
pub type IntPoly = Poly<BigInt>;

impl Poly<BigInt> {
    pub fn to_rational(&self) -> Poly<BigRational> {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn to_i64(&self) -> Option<Poly<i64>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(i64::try_from(c).ok()?);
        }
        Some(Poly::from_coeffs(out))
    }

    /// Remainder-checked division by a monic integer polynomial. Returns the
    /// quotient when the division is exact over the integers.
    pub fn div_exact_monic(&self, rhs: &Self) -> Option<Self> {
        assert!(rhs.is_monic(), "divisor must be monic");
        let drhs = rhs.degree().unwrap();
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let dself = self.degree().unwrap();
        if dself < drhs {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); dself - drhs + 1];
        for k in (drhs..rem.len()).rev() {
            let q = rem[k].clone();
            if q.is_zero() {
                continue;
            }
            quo[k - drhs] = q.clone();
            for (j, c) in rhs.coeffs.iter().enumerate() {
                let idx = k - drhs + j;
                rem[idx] -= q.clone() * c;
            }
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::from_coeffs(quo))
        } else {
            None
        }
    }

    pub fn is_squarefree(&self) -> bool {
        let p = self.to_rational();
        p.gcd(&p.derivative()).degree() == Some(0)
    }

    /// Exact count of positive real roots with multiplicity.
    pub fn positive_root_count(&self) -> usize {
        let z = self.trailing_zero_count();
        let core = self.shift_down(z).to_rational();
        let bound = core.root_bound();
        core.count_roots_with_multiplicity_open(&BigRational::zero(), &bound)
    }

    /// Exact count of negative real roots with multiplicity.
    pub fn negative_root_count(&self) -> usize {
        let z = self.trailing_zero_count();
        let core = self.shift_down(z).to_rational();
        let bound = core.root_bound();
        core.count_roots_with_multiplicity_open(&(-bound), &BigRational::zero())
    }

    /// True when every real root lies in the open interval
    /// `(-sqrt(s), sqrt(s))`, decided exactly. Intended for monic
    /// polynomials with all roots real.
    pub fn roots_within_sqrt(&self, s: i64) -> bool {
        let z = self.trailing_zero_count();
        let p = self.shift_down(z);
        if p.degree() == Some(0) {
            return true;
        }
        // q(u) = +-p(t)p(-t) with u = t^2 has roots at the squared roots.
        let prod = p.mul(&p.reflect());
        let mut q_coeffs = Vec::new();
        for (k, c) in prod.coeffs().iter().enumerate() {
            if k % 2 == 0 {
                q_coeffs.push(c.clone());
            } else {
                assert!(c.is_zero(), "p(t)p(-t) must be even");
            }
        }
        let q = Poly::from_coeffs(q_coeffs).to_rational();
        let s_rat = BigRational::from_integer(BigInt::from(s));
        if q.eval(&s_rat).is_zero() {
            return false;
        }
        let bound = q.root_bound();
        if bound <= s_rat {
            return true;
        }
        q.count_distinct_roots_open(&s_rat, &bound) == 0
    }

    /// Repeatedly divides by `t - r` and returns the multiplicity of the
    /// integer root `r`.
    pub fn integer_root_multiplicity(&self, r: i64) -> usize {
        let lin = Poly::from_coeffs(vec![BigInt::from(-r), BigInt::one()]);
        let mut p = self.clone();
        let mut mult = 0;
        while let Some(q) = p.div_exact_monic(&lin) {
            p = q;
            mult += 1;
            if p.is_zero() || p.degree() == Some(0) {
                break;
            }
        }
        mult
    }

    /// True when the spectrum is `{+1, -1}` only: the polynomial is a product
    /// of `t - 1` and `t + 1` factors.
    pub fn roots_all_plus_minus_one(&self) -> bool {
        let mut p = self.clone();
        for r in [1i64, -1] {
            let lin = Poly::from_coeffs(vec![BigInt::from(-r), BigInt::one()]);
            while p.degree().map_or(false, |d| d > 0) {
                match p.div_exact_monic(&lin) {
                    Some(q) => p = q,
                    None => break,
                }
            }
        }
        p.degree() == Some(0)
    }

    /// Irreducibility over the rationals for monic polynomials of degree at
    /// most 7, by exhaustive search for a monic integer factor of degree at
    /// most `deg/2`. Candidates are pinned down by divisibility of the values
    /// at 0, 1 and -1 and confirmed by exact division.
    pub fn is_irreducible_over_q(&self) -> bool {
        assert!(self.is_monic(), "irreducibility test expects a monic polynomial");
        let deg = self.degree().unwrap();
        assert!(deg <= 7, "irreducibility search is gated to degree <= 7");
        if deg == 1 {
            return true;
        }
        if deg == 0 {
            return false;
        }
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return false; // divisible by t
        }
        let c0 = big_to_i128(&c0);
        // Degree-1 factors: integer roots divide the constant term.
        for r in divisors_signed(c0) {
            if self.eval(&BigInt::from(r)).is_zero() {
                return false;
            }
        }
        if deg < 4 {
            return true;
        }
        let p1 = big_to_i128(&self.eval(&BigInt::from(1)));
        let pm1 = big_to_i128(&self.eval(&BigInt::from(-1)));
        debug_assert!(p1 != 0 && pm1 != 0);
        let div0 = divisors_signed(c0);
        let div1 = divisors_signed(p1);
        let divm1 = divisors_signed(pm1);
        // Degree-2 factors t^2 + a t + b.
        for &b in &div0 {
            for &s1 in &div1 {
                let a = s1 - 1 - b;
                let gm1 = 1 - a + b;
                if gm1 == 0 || pm1 % gm1 != 0 {
                    continue;
                }
                let g = Poly::from_coeffs(vec![BigInt::from(b), BigInt::from(a), BigInt::one()]);
                if self.div_exact_monic(&g).is_some() {
                    return false;
                }
            }
        }
        if deg < 6 {
            return true;
        }
        // Degree-3 factors t^3 + a t^2 + b t + c.
        for &c in &div0 {
            for &s1 in &div1 {
                for &sm1 in &divm1 {
                    if (s1 + sm1) % 2 != 0 {
                        continue;
                    }
                    let a = (s1 + sm1) / 2 - c;
                    let b = (s1 - sm1) / 2 - 1;
                    let g = Poly::from_coeffs(vec![
                        BigInt::from(c),
                        BigInt::from(b),
                        BigInt::from(a),
                        BigInt::one(),
                    ]);
                    if self.div_exact_monic(&g).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn big_to_i128(v: &BigInt) -> i128 {
    i128::try_from(v).expect("coefficient out of i128 range")
}

fn divisors_signed(v: i128) -> Vec<i128> {
    let v = v.abs();
    debug_assert!(v > 0);
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            out.push(-d);
            let q = v / d;
            if q != d {
                out.push(q);
                out.push(-q);
            }
        }
        d += 1;
    }
    out
}

impl<T: ExactScalar + Coeff> fmt::Display for Poly<T> {
    /// Plain text form with descending powers: `t^4 - 4t^2 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (sign_str, mag) = if c.is_negative() {
                (if first { "-" } else { " - " }, -c.clone())
            } else {
                (if first { "" } else { " + " }, c.clone())
            };
            write!(f, "{sign_str}")?;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 => {
                    if unit {
                        write!(f, "t")?
                    } else {
                        write!(f, "{mag}t")?
                    }
                }
                _ => {
                    if unit {
                        write!(f, "t^{k}")?
                    } else {
                        write!(f, "{mag}t^{k}")?
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// Parse helper for tests and the CLI: builds an integer polynomial from
/// low-to-high coefficients given as `i64`.
pub fn int_poly(coeffs: &[i64]) -> IntPoly {
    Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_plain_format() {
        assert_eq!(int_poly(&[2, -3, 0, 1]).to_string(), "t^3 - 3t + 2");
        assert_eq!(int_poly(&[4, 0, -4, 0, 1]).to_string(), "t^4 - 4t^2 + 4");
        assert_eq!(int_poly(&[0, 2, 2, -5, 0, 1]).to_string(), "t^5 - 5t^3 + 2t^2 + 2t");
        assert_eq!(int_poly(&[0]).to_string(), "0");
        assert_eq!(int_poly(&[-1, 1]).to_string(), "t - 1");
    }

    #[test]
    fn div_rem_roundtrip() {
        let p = int_poly(&[2, -3, 0, 1]).to_rational();
        let d = int_poly(&[-1, 1]).to_rational();
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q.mul(&d), p);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // (t + 2)(t - 1)^2
        let p = int_poly(&[2, -3, 0, 1]).to_rational();
        let sf = p.squarefree_decomposition();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0].0, int_poly(&[2, 1]).to_rational());
        assert_eq!(sf[0].1, 1);
        assert_eq!(sf[1].0, int_poly(&[-1, 1]).to_rational());
        assert_eq!(sf[1].1, 2);
    }

    #[test]
    fn root_counts_with_multiplicity() {
        // (t + 2)(t - 1)^2: one negative root, two positive with multiplicity.
        let p = int_poly(&[2, -3, 0, 1]);
        assert_eq!(p.positive_root_count(), 2);
        assert_eq!(p.negative_root_count(), 1);
        // t^2(t^2 - 3): zero has multiplicity two, one root on each side.
        let p = int_poly(&[0, 0, -3, 0, 1]);
        assert_eq!(p.trailing_zero_count(), 2);
        assert_eq!(p.positive_root_count(), 1);
        assert_eq!(p.negative_root_count(), 1);
    }

    #[test]
    fn interval_membership_is_exact_at_boundaries() {
        // roots +-1 lie inside (-sqrt2, sqrt2)
        assert!(int_poly(&[-1, 0, 1]).roots_within_sqrt(2));
        // roots +-sqrt2 on the boundary are excluded for s = 2, included for s = 3
        let p = int_poly(&[-2, 0, 1]);
        assert!(!p.roots_within_sqrt(2));
        assert!(p.roots_within_sqrt(3));
        // roots +-sqrt3 excluded at s = 3
        assert!(!int_poly(&[-3, 0, 1]).roots_within_sqrt(3));
    }

    #[test]
    fn plus_minus_one_spectrum_test() {
        assert!(int_poly(&[-1, 0, 1]).roots_all_plus_minus_one());
        assert!(int_poly(&[1, 0, -2, 0, 1]).roots_all_plus_minus_one()); // (t^2-1)^2
        assert!(!int_poly(&[0, -1, 0, 1]).roots_all_plus_minus_one()); // t(t^2-1)
        assert!(!int_poly(&[-2, 0, 1]).roots_all_plus_minus_one());
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(int_poly(&[-2, 0, 1]).is_irreducible_over_q()); // t^2 - 2
        assert!(!int_poly(&[-1, 0, 1]).is_irreducible_over_q()); // (t-1)(t+1)
        assert!(!int_poly(&[4, 0, -4, 0, 1]).is_irreducible_over_q()); // (t^2-2)^2
        assert!(!int_poly(&[2, -3, 0, 0, 1]).is_irreducible_over_q()); // root at t = 1
    }

    #[test]
    fn irreducibility_quartics() {
        // t^4 + 1 is irreducible over Q.
        assert!(int_poly(&[1, 0, 0, 0, 1]).is_irreducible_over_q());
        // t^4 - 6t^2 + 1 = (t^2 + 2t - 1)(t^2 - 2t - 1).
        assert!(!int_poly(&[1, 0, -6, 0, 1]).is_irreducible_over_q());
        // t^4 - 4t^2 + 2 is irreducible (Eisenstein at 2).
        assert!(int_poly(&[2, 0, -4, 0, 1]).is_irreducible_over_q());
        // t^4 - 5t^2 + 4 = (t^2-1)(t^2-4).
        assert!(!int_poly(&[4, 0, -5, 0, 1]).is_irreducible_over_q());
        // degree 6 with an irreducible cubic factor times quadratic:
        let p = int_poly(&[-2, 0, 0, 1]).mul(&int_poly(&[-2, 0, 1])); // (t^3-2)(t^2-2)
        assert!(!p.is_irreducible_over_q());
        // (t^2-2)^3
        let q = int_poly(&[-2, 0, 1]);
        assert!(!q.mul(&q).mul(&q).is_irreducible_over_q());
    }

    #[test]
    fn integer_root_multiplicity_counts() {
        // (t-2)^3 (t+1)
        let p = int_poly(&[-2, 1])
            .mul(&int_poly(&[-2, 1]))
            .mul(&int_poly(&[-2, 1]))
            .mul(&int_poly(&[1, 1]));
        assert_eq!(p.integer_root_multiplicity(2), 3);
        assert_eq!(p.integer_root_multiplicity(-1), 1);
        assert_eq!(p.integer_root_multiplicity(5), 0);
    }
}
