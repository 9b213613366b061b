//! Dense square matrices over an exact ring scalar, with the
//! Faddeev-LeVerrier characteristic polynomial.

use num_bigint::BigInt;

use crate::scalar::{Gaussian, ExactScalar};

/// Ring scalar usable as a matrix entry.
pub trait MatScalar:
    Clone
    + PartialEq
    + std::fmt::Debug
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn exact_div_small(&self, k: usize) -> Self;
}

impl<T: ExactScalar> MatScalar for Gaussian<T> {
    fn zero() -> Self {
        Gaussian::zero()
    }
    fn one() -> Self {
        Gaussian::one()
    }
    fn is_zero(&self) -> bool {
        Gaussian::is_zero(self)
    }
    fn exact_div_small(&self, k: usize) -> Self {
        Gaussian::exact_div_small(self, k)
    }
}

macro_rules! impl_mat_scalar_int {
    ($($t:ty),*) => {$(
        impl MatScalar for $t {
            fn zero() -> Self { num_traits::Zero::zero() }
            fn one() -> Self { num_traits::One::one() }
            fn is_zero(&self) -> bool { num_traits::Zero::is_zero(self) }
            fn exact_div_small(&self, k: usize) -> Self {
                ExactScalar::exact_div_small(self, k)
            }
        }
    )*};
}

impl_mat_scalar_int!(i64, i128, BigInt);

/// Row-major dense n-by-n matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: MatScalar> Matrix<S> {
    pub fn zero(n: usize) -> Self {
        Matrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.n {
            t = t + self[(i, i)].clone();
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out: Matrix<S> = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix { n: self.n, data }
    }

    pub fn scale(&self, c: &S) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { n: self.n, data }
    }

    fn add_diag(&mut self, c: &S) {
        for i in 0..self.n {
            self[(i, i)] = self[(i, i)].clone() + c.clone();
        }
    }

    /// Exact `(u, v)` entry of the k-th power.
    pub fn power_entry(&self, k: usize, u: usize, v: usize) -> S {
        assert!(u < self.n && v < self.n);
        if k == 0 {
            return if u == v { S::one() } else { S::zero() };
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc[(u, v)].clone()
    }

    /// Coefficients `c_0..c_n` (ascending, monic) of `det(tI - M)` by the
    /// Faddeev-LeVerrier recurrence. All divisions are exact and checked.
    pub fn char_poly_coeffs(&self) -> Vec<S> {
        let n = self.n;
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = S::one();
        if n == 0 {
            return coeffs;
        }
        let mut mk = self.clone();
        let mut ak = -mk.trace();
        coeffs[n - 1] = ak.clone();
        for k in 2..=n {
            let mut step = mk;
            step.add_diag(&ak);
            mk = self.mul(&step);
            ak = (-mk.trace()).exact_div_small(k);
            coeffs[n - k] = ak.clone();
        }
        coeffs
    }
}

impl<S> std::ops::Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gaussian;

    /// Independent oracle: Laplace expansion determinant.
    fn det_laplace<S: MatScalar>(m: &Matrix<S>) -> S {
        let n = m.dim();
        if n == 0 {
            return S::one();
        }
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut det = S::zero();
        for j in 0..n {
            if m[(0, j)].is_zero() {
                continue;
            }
            let minor = Matrix::from_fn(n - 1, |r, c| {
                let cc = if c < j { c } else { c + 1 };
                m[(r + 1, cc)].clone()
            });
            let term = m[(0, j)].clone() * det_laplace(&minor);
            det = if j % 2 == 0 { det + term } else { det - term };
        }
        det
    }

    /// Evaluate the char poly at integer points and compare against
    /// det(tI - M) computed by Laplace expansion.
    fn check_char_poly(m: &Matrix<Gaussian<i64>>) {
        let coeffs = m.char_poly_coeffs();
        let n = m.dim();
        for t in -(n as i64 + 1)..=(n as i64 + 1) {
            let tm = {
                let mut x = m.scale(&(-Gaussian::one()));
                x.add_diag(&Gaussian::new(t, 0));
                x
            };
            let det = det_laplace(&tm);
            let mut val = Gaussian::zero();
            let tt = Gaussian::new(t, 0);
            for c in coeffs.iter().rev() {
                val = val * tt.clone() + c.clone();
            }
            assert_eq!(val, det, "char poly mismatch at t = {t}");
        }
    }

    #[test]
    fn faddeev_leverrier_matches_laplace_on_random_hermitian() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 0..=5usize {
            for _ in 0..20 {
                let mut m = Matrix::zero(n);
                for i in 0..n {
                    for j in (i + 1)..n {
                        let e: Gaussian<i64> = match rng.gen_range(0..4) {
                            0 => Gaussian::zero(),
                            1 => Gaussian::one(),
                            2 => Gaussian::i(),
                            _ => -Gaussian::i(),
                        };
                        m[(j, i)] = e.conj();
                        m[(i, j)] = e;
                    }
                }
                check_char_poly(&m);
            }
        }
    }

    #[test]
    fn faddeev_leverrier_matches_laplace_on_nonsymmetric() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 1..=5usize {
            for _ in 0..20 {
                let m = Matrix::from_fn(n, |_, _| Gaussian::new(rng.gen_range(0..2), 0));
                check_char_poly(&m);
            }
        }
    }

    #[test]
    fn power_entry_identity() {
        let m: Matrix<Gaussian<i64>> = Matrix::from_fn(3, |i, j| {
            if (i + 1) % 3 == j {
                Gaussian::i()
            } else if (j + 1) % 3 == i {
                -Gaussian::i()
            } else {
                Gaussian::zero()
            }
        });
        for u in 0..3 {
            for v in 0..3 {
                let expect = if u == v { Gaussian::one() } else { Gaussian::zero() };
                assert_eq!(m.power_entry(0, u, v), expect);
            }
        }
    }
}
