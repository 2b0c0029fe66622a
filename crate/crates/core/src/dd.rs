//! Minimal double-double arithmetic (unevaluated sum of two f64).
//!
//! The alternating Bessel series loses ~0.43·x decimal digits to cancellation
//! at argument x; plain f64 cannot honor a 1e-12 relative contract beyond
//! x ≈ 12. Accumulating the series core in ~32-digit double-double keeps the
//! certified region intact. Only the handful of operations the series
//! recurrence needs are implemented.

/// Double-double value `hi + lo` with |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    Dd { hi: s, lo: e }
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> Dd {
    // requires |a| >= |b|
    let s = a + b;
    let e = b - (s - a);
    Dd { hi: s, lo: e }
}

#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    // mul_add rounds once, so this is the exact residual.
    let e = a.mul_add(b, -p);
    Dd { hi: p, lo: e }
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact sum of two f64 values.
    #[inline]
    pub fn from_sum(a: f64, b: f64) -> Dd {
        two_sum(a, b)
    }

    /// Exact product of two f64 values.
    #[inline]
    pub fn from_prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    #[inline]
    pub fn add(self, rhs: Dd) -> Dd {
        let s = two_sum(self.hi, rhs.hi);
        let t = two_sum(self.lo, rhs.lo);
        let mut e = s.lo + t.hi;
        let r1 = quick_two_sum(s.hi, e);
        e = t.lo + r1.lo;
        quick_two_sum(r1.hi, e)
    }

    #[inline]
    pub fn mul(self, rhs: Dd) -> Dd {
        let p = two_prod(self.hi, rhs.hi);
        let e = self.hi * rhs.lo + self.lo * rhs.hi + p.lo;
        quick_two_sum(p.hi, e)
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> Dd {
        let p = two_prod(self.hi, rhs);
        let e = self.lo * rhs + p.lo;
        quick_two_sum(p.hi, e)
    }

    /// Quotient by a double-double divisor (two Newton corrections).
    #[inline]
    pub fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self.add(rhs.mul_f64(q1).neg());
        let q2 = r.hi / rhs.hi;
        let r2 = r.add(rhs.mul_f64(q2).neg());
        let q3 = r2.hi / rhs.hi;
        quick_two_sum(q1, q2).add(Dd::from_f64(q3))
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            self.neg()
        } else {
            self
        }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}
