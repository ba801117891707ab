//! Fixed-point ball arithmetic over `BigInt`.
//!
//! A [`Ball`] at precision `p` is the closed interval
//! `[(mid - rad) / 2^p, (mid + rad) / 2^p]`. Every operation returns a ball
//! that contains the exact result for every choice of inputs inside the
//! operand balls.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigUint,
    prec: u32,
}

fn ceil_div(a: &BigUint, b: &BigUint) -> BigUint {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1u32
    }
}

impl Ball {
    pub fn zero(prec: u32) -> Self {
        Ball {
            mid: BigInt::zero(),
            rad: BigUint::zero(),
            prec,
        }
    }

    pub fn from_int(n: &BigInt, prec: u32) -> Self {
        Ball {
            mid: n << prec,
            rad: BigUint::zero(),
            prec,
        }
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        Self::from_int(&BigInt::from(n), prec)
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Widens the radius by `ulps` units of the last place.
    pub fn widen(mut self, ulps: &BigUint) -> Self {
        self.rad += ulps;
        self
    }

    fn mag_upper(&self) -> BigUint {
        self.mid.magnitude() + &self.rad
    }

    /// `+1` or `-1` when the ball excludes zero, `None` otherwise.
    pub fn sign(&self) -> Option<i32> {
        if self.mid.magnitude() <= &self.rad {
            None
        } else if self.mid.is_positive() {
            Some(1)
        } else {
            Some(-1)
        }
    }

    /// Lower bound on `|x|` in ulps, or zero.
    pub fn mag_lower_ulps(&self) -> BigUint {
        if self.mid.magnitude() > &self.rad {
            self.mid.magnitude() - &self.rad
        } else {
            BigUint::zero()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.sign().is_none()
    }

    pub fn div_int(&self, k: u64) -> Ball {
        assert!(k > 0);
        let kb = BigUint::from(k);
        Ball {
            mid: self.mid.div_floor(&BigInt::from(k)),
            rad: ceil_div(&self.rad, &kb) + 1u32,
            prec: self.prec,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Ball {
        Ball {
            mid: &self.mid * k,
            rad: &self.rad * k.magnitude(),
            prec: self.prec,
        }
    }

    /// Division by a ball that excludes zero.
    pub fn div(&self, y: &Ball) -> Option<Ball> {
        debug_assert_eq!(self.prec, y.prec);
        let my = y.mid.magnitude();
        if my <= &y.rad {
            return None;
        }
        let mid = (&self.mid << self.prec).div_floor(&y.mid);
        // |x/y - mx/my| <= (rx |my| + |mx| ry) / (|my| (|my| - ry))
        let num = (&self.rad * my + self.mid.magnitude() * &y.rad) << self.prec;
        let den = my * (my - &y.rad);
        Some(Ball {
            mid,
            rad: ceil_div(&num, &den) + 1u32,
            prec: self.prec,
        })
    }

    pub fn square(&self) -> Ball {
        self * self
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mid.to_f64().unwrap_or(f64::NAN);
        m / 2f64.powi(self.prec as i32)
    }

    /// Upper bound on the radius as a float, for diagnostics.
    pub fn radius_f64(&self) -> f64 {
        self.rad.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(self.prec as i32)
    }
}

impl Add for &Ball {
    type Output = Ball;
    fn add(self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball {
            mid: &self.mid + &o.mid,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }
}

impl Sub for &Ball {
    type Output = Ball;
    fn sub(self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball {
            mid: &self.mid - &o.mid,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball {
            mid: -&self.mid,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }
}

impl Mul for &Ball {
    type Output = Ball;
    fn mul(self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        let p = self.prec;
        let prod = &self.mid * &o.mid;
        let err =
            self.mid.magnitude() * &o.rad + o.mid.magnitude() * &self.rad + &self.rad * &o.rad;
        let one = BigUint::from(1u32) << p;
        Ball {
            mid: prod >> p,
            rad: ceil_div(&err, &one) + 1u32,
            prec: p,
        }
    }
}

/// Complex ball as a pair of real balls.
#[derive(Clone, Debug)]
pub struct ComplexBall {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexBall {
    pub fn zero(prec: u32) -> Self {
        ComplexBall {
            re: Ball::zero(prec),
            im: Ball::zero(prec),
        }
    }

    pub fn real(re: Ball) -> Self {
        let p = re.prec;
        ComplexBall {
            re,
            im: Ball::zero(p),
        }
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm_sqr(&self) -> Ball {
        &self.re.square() + &self.im.square()
    }

    pub fn scale(&self, k: &Ball) -> ComplexBall {
        ComplexBall {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    pub fn div_real(&self, k: &Ball) -> Option<ComplexBall> {
        Some(ComplexBall {
            re: self.re.div(k)?,
            im: self.im.div(k)?,
        })
    }
}

impl Add for &ComplexBall {
    type Output = ComplexBall;
    fn add(self, o: &ComplexBall) -> ComplexBall {
        ComplexBall {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &ComplexBall {
    type Output = ComplexBall;
    fn sub(self, o: &ComplexBall) -> ComplexBall {
        ComplexBall {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &ComplexBall {
    type Output = ComplexBall;
    fn mul(self, o: &ComplexBall) -> ComplexBall {
        ComplexBall {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }
}

/// `atan(1/x)` for an integer `x >= 2`.
fn atan_inv(x: u64, prec: u32) -> Ball {
    let x2 = x * x;
    let mut pow = Ball::from_i64(1, prec).div_int(x);
    let mut sum = Ball::zero(prec);
    let mut k = 0u64;
    loop {
        let term = pow.div_int(2 * k + 1);
        sum = if k.is_multiple_of(2) {
            &sum + &term
        } else {
            &sum - &term
        };
        pow = pow.div_int(x2);
        k += 1;
        if pow.mid.is_zero() {
            // alternating series with decreasing terms: tail bounded by the next term
            let tail = pow.mag_upper();
            return sum.widen(&tail);
        }
    }
}

/// `π` by Machin's formula.
pub fn pi(prec: u32) -> Ball {
    let a = atan_inv(5, prec).mul_int(&BigInt::from(16));
    let b = atan_inv(239, prec).mul_int(&BigInt::from(4));
    &a - &b
}

/// `(cos θ, sin θ)` for `θ = 2π a / q` with `0 <= a <= q / 2`, by Taylor series.
fn cos_sin_upper_half(a: u64, q: u64, prec: u32) -> (Ball, Ball) {
    let theta = pi(prec).mul_int(&BigInt::from(2 * a)).div_int(q);
    let mut term = Ball::from_i64(1, prec);
    let mut cos = Ball::zero(prec);
    let mut sin = Ball::zero(prec);
    let mut n = 0u64;
    loop {
        match n % 4 {
            0 => cos = &cos + &term,
            1 => sin = &sin + &term,
            2 => cos = &cos - &term,
            _ => sin = &sin - &term,
        }
        term = (&term * &theta).div_int(n + 1);
        n += 1;
        // θ <= π < 4: once n >= 8 successive terms at least halve, so the
        // tail of either series is below twice the first omitted term.
        if n >= 8 && term.mid.magnitude() <= &BigUint::from(1u32) {
            let tail = term.mag_upper() * 2u32;
            return (cos.widen(&tail), sin.widen(&tail));
        }
    }
}

/// `ω = e^{2πi a/q}` as a complex ball.
pub fn root_of_unity(a: u64, q: u64, prec: u32) -> ComplexBall {
    let a = a % q;
    if 2 * a <= q {
        let (c, s) = cos_sin_upper_half(a, q, prec);
        ComplexBall { re: c, im: s }
    } else {
        let (c, s) = cos_sin_upper_half(q - a, q, prec);
        ComplexBall { re: c, im: -&s }
    }
}
