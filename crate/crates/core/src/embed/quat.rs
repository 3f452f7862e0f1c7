use std::fmt;
use std::ops::{Add, Mul, Neg};

/// `a + b·i + c·j + d·k` with integer coefficients, Hamilton convention
/// (`ij = k`, `jk = i`, `ki = j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Quat {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Quat {
    pub const ONE: Quat = Quat::new(1, 0, 0, 0);
    pub const I: Quat = Quat::new(0, 1, 0, 0);
    pub const J: Quat = Quat::new(0, 0, 1, 0);
    pub const K: Quat = Quat::new(0, 0, 0, 1);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn from_coeffs(v: [i64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub fn coeffs(self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Sum of squared coefficients; multiplicative.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    pub fn conj(self) -> Self {
        Self::new(self.a, -self.b, -self.c, -self.d)
    }

    pub fn is_zero(self) -> bool {
        self == Self::default()
    }
}

impl Mul for Quat {
    type Output = Quat;

    fn mul(self, q: Quat) -> Quat {
        let p = self;
        Quat {
            a: p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            b: p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            c: p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            d: p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a,
        }
    }
}

impl Add for Quat {
    type Output = Quat;

    fn add(self, q: Quat) -> Quat {
        Quat::new(self.a + q.a, self.b + q.b, self.c + q.c, self.d + q.d)
    }
}

impl Neg for Quat {
    type Output = Quat;

    fn neg(self) -> Quat {
        Quat::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i+{}j+{}k", self.a, self.b, self.c, self.d)
    }
}
