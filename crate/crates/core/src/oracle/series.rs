//! Maclaurin series for erf in double-double arithmetic.
//!
//! The partial sums of the series swing to ~e^{|z|²} before settling, so at
//! |z| = 4 a plain double evaluation loses five digits to cancellation.
//! Carrying ~32 digits per term and summing with error-free transformations
//! keeps the result good to the last bit of a double.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn from_f64(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        let err = (a - (s - bb)) + (b - bb);
        Dd { hi: s, lo: err }
    }

    fn quick_two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        Dd {
            hi: s,
            lo: b - (s - a),
        }
    }

    fn add(self, other: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, other.hi);
        let t = Dd::two_sum(self.lo, other.lo);
        let s = Dd::quick_two_sum(s.hi, s.lo + t.hi);
        Dd::quick_two_sum(s.hi, s.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    fn mul(self, other: Dd) -> Dd {
        let p = self.hi * other.hi;
        let err = self.hi.mul_add(other.hi, -p);
        let err = err + (self.hi * other.lo + self.lo * other.hi);
        Dd::quick_two_sum(p, err)
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let p = q1 * d;
        let perr = q1.mul_add(d, -p);
        let r = (self.hi - p - perr + self.lo) / d;
        Dd::quick_two_sum(q1, r)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Debug, Clone, Copy)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl DdComplex {
    fn from_complex(z: Complex64) -> Self {
        DdComplex {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    fn add(self, o: DdComplex) -> Self {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn mul(self, o: DdComplex) -> Self {
        DdComplex {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn scale(self, s: Dd) -> Self {
        DdComplex {
            re: self.re.mul(s),
            im: self.im.mul(s),
        }
    }

    fn div_f64(self, d: f64) -> Self {
        DdComplex {
            re: self.re.div_f64(d),
            im: self.im.div_f64(d),
        }
    }

    fn approx_norm(self) -> f64 {
        self.re.hi.hypot(self.im.hi)
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// 2/√π split into leading and trailing doubles.
const TWO_OVER_SQRT_PI: Dd = Dd {
    hi: std::f64::consts::FRAC_2_SQRT_PI,
    lo: 1.533_545_961_316_588e-17,
};

const MAX_TERMS: usize = 400;

/// Calls `visit` with successive partial sums (2/√π)Σ_{k≤K} of the series,
/// stopping once a term drops below 1e−32 of the running sum, so that
/// 1 − erf keeps full double precision even where erfc is small.
fn for_each_partial_sum(z: Complex64, mut visit: impl FnMut(DdComplex) -> bool) {
    let zd = DdComplex::from_complex(z);
    let neg_sq = zd.mul(zd);
    let neg_sq = DdComplex {
        re: neg_sq.re.neg(),
        im: neg_sq.im.neg(),
    };
    let mut power = zd; // (−1)^k z^{2k+1}/k!
    let mut sum = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    for k in 0..MAX_TERMS {
        if k > 0 {
            power = power.mul(neg_sq).div_f64(k as f64);
        }
        let term = power.div_f64((2 * k + 1) as f64);
        sum = sum.add(term);
        if !visit(sum.scale(TWO_OVER_SQRT_PI)) {
            return;
        }
        if term.approx_norm() <= 1e-32 * sum.approx_norm() {
            return;
        }
    }
}

fn limit(z: Complex64) -> DdComplex {
    let mut last = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };
    if z.re != 0.0 || z.im != 0.0 {
        for_each_partial_sum(z, |s| {
            last = s;
            true
        });
    }
    last
}

pub(crate) fn erf_series(z: Complex64) -> Complex64 {
    limit(z).to_complex()
}

/// 1 − erf(z) formed before rounding to double.
pub(crate) fn erfc_series(z: Complex64) -> Complex64 {
    let erf = limit(z);
    Complex64::new(
        Dd::from_f64(1.0).sub(erf.re).to_f64(),
        erf.im.neg().to_f64(),
    )
}

pub(crate) fn partial_sums(z: Complex64, count: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(count);
    for_each_partial_sum(z, |s| {
        out.push(s.to_complex());
        out.len() < count
    });
    out
}
