//! Fixed-size real 3-vectors, real 3×3 matrices and complex 2×2 matrices.

use core::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::{Cplx, Real};

/// Real vector in frame components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3<S>(pub [S; 3]);

impl<S: Real> Vec3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Self([x, y, z])
    }

    pub fn zero() -> Self {
        Self([S::zero(); 3])
    }

    /// Frame basis vector `e_{i+1}`.
    pub fn basis(i: usize) -> Self {
        let mut v = Self::zero();
        v.0[i] = S::one();
        v
    }

    pub fn dot(&self, other: &Self) -> S {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn norm_sqr(&self) -> S {
        self.dot(self)
    }

    pub fn norm(&self) -> S {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: S) -> Self {
        Self(self.0.map(|x| x * s))
    }

    pub fn max_abs(&self) -> S {
        self.0.iter().fold(S::zero(), |m, x| m.max(x.abs()))
    }
}

impl<S> Index<usize> for Vec3<S> {
    type Output = S;
    fn index(&self, i: usize) -> &S {
        &self.0[i]
    }
}

impl<S> IndexMut<usize> for Vec3<S> {
    fn index_mut(&mut self, i: usize) -> &mut S {
        &mut self.0[i]
    }
}

impl<S: Real> Add for Vec3<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl<S: Real> AddAssign for Vec3<S> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<S: Real> Sub for Vec3<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl<S: Real> Neg for Vec3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|x| -x))
    }
}

/// Real 3×3 matrix, row-major. As an endomorphism, `A e_j = Σ_i a[i][j] e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat3<S>(pub [[S; 3]; 3]);

impl<S: Real> Mat3<S> {
    pub fn zero() -> Self {
        Self([[S::zero(); 3]; 3])
    }

    pub fn identity() -> Self {
        Self::diag(S::one(), S::one(), S::one())
    }

    pub fn diag(a: S, b: S, c: S) -> Self {
        let mut m = Self::zero();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_fn(f: impl Fn(usize, usize) -> S) -> Self {
        let mut m = Self::zero();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn trace(&self) -> S {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn scale(&self, s: S) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    /// Image of `e_j`, i.e. column `j`.
    pub fn column(&self, j: usize) -> Vec3<S> {
        Vec3::new(self.0[0][j], self.0[1][j], self.0[2][j])
    }

    pub fn apply(&self, v: &Vec3<S>) -> Vec3<S> {
        let mut out = Vec3::zero();
        for i in 0..3 {
            out.0[i] = (0..3).fold(S::zero(), |acc, j| acc + self.0[i][j] * v.0[j]);
        }
        out
    }

    pub fn matmul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| (0..3).fold(S::zero(), |acc, k| acc + self.0[i][k] * o.0[k][j]))
    }

    pub fn symmetric_part(&self) -> Self {
        Self::from_fn(|i, j| (self.0[i][j] + self.0[j][i]) * S::lit(0.5))
    }

    pub fn skew_part(&self) -> Self {
        Self::from_fn(|i, j| (self.0[i][j] - self.0[j][i]) * S::lit(0.5))
    }

    /// Largest absolute deviation from symmetry.
    pub fn asymmetry(&self) -> S {
        let mut worst = S::zero();
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.0[i][j] - self.0[j][i]).abs());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> S {
        self.0
            .iter()
            .flatten()
            .fold(S::zero(), |m, x| m.max(x.abs()))
    }

    pub fn max_abs_diff(&self, o: &Self) -> S {
        (*self - *o).max_abs()
    }
}

impl<S: Real> Add for Mat3<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + o.0[i][j])
    }
}

impl<S: Real> Sub for Mat3<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - o.0[i][j])
    }
}

impl<S: Real> Neg for Mat3<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-S::one())
    }
}

/// Complex 2×2 matrix acting on spinor components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2<S>(pub [[Cplx<S>; 2]; 2]);

impl<S: Real> Mat2<S> {
    pub fn zero() -> Self {
        Self([[Cplx::new(S::zero(), S::zero()); 2]; 2])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        m.0[0][0] = Cplx::new(S::one(), S::zero());
        m.0[1][1] = Cplx::new(S::one(), S::zero());
        m
    }

    pub fn scale(&self, s: Cplx<S>) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for x in row.iter_mut() {
                *x = *x * s;
            }
        }
        m
    }

    pub fn scale_real(&self, s: S) -> Self {
        self.scale(Cplx::new(s, S::zero()))
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn commutator(&self, o: &Self) -> Self {
        *self * *o - *o * *self
    }

    pub fn max_abs(&self) -> S {
        self.0
            .iter()
            .flatten()
            .fold(S::zero(), |m, x| m.max(x.norm()))
    }
}

impl<S: Real> Add for Mat2<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut m = self;
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = m.0[i][j] + o.0[i][j];
            }
        }
        m
    }
}

impl<S: Real> Sub for Mat2<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + o.scale_real(-S::one())
    }
}

impl<S: Real> Mul for Mat2<S> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut m = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                m.0[i][j] = self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j];
            }
        }
        m
    }
}
