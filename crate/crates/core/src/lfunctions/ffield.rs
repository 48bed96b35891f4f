//! Factorization patterns of polynomials over prime fields.

use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct FpPoly {
    c: Vec<u64>,
    p: u64,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl FpPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        for x in &mut c {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { c, p }
    }

    fn one(p: u64) -> Self {
        FpPoly::new(vec![1], p)
    }

    fn x(p: u64) -> Self {
        FpPoly::new(vec![0, 1], p)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn is_one(&self) -> bool {
        self.c == [1]
    }

    fn deg(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn monic(&self) -> Self {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => {
                let k = inv(lc, self.p);
                FpPoly::new(self.c.iter().map(|&a| mulmod(a, k, self.p)).collect(), self.p)
            }
        }
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = o.c.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        FpPoly::new(c, self.p)
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly::new(vec![], self.p);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(c, self.p)
    }

    fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let p = self.p;
        let mut r = self.c.clone();
        let dl = d.c.len();
        if r.len() < dl {
            return (FpPoly::new(vec![], p), self.clone());
        }
        let k = inv(*d.c.last().unwrap(), p);
        let mut q = vec![0u64; r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let coef = mulmod(r[i + dl - 1], k, p);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &b) in d.c.iter().enumerate() {
                r[i + j] = (r[i + j] + p - mulmod(coef, b, p)) % p;
            }
        }
        (FpPoly::new(q, p), FpPoly::new(r, p))
    }

    fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mulmod(a, i as u64 % self.p, self.p))
            .collect();
        FpPoly::new(c, self.p)
    }

    fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut r = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        r
    }

    /// Inverse of the Frobenius on a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        FpPoly::new(self.c.iter().step_by(p).copied().collect(), self.p)
    }
}

/// Monic squarefree factors with their multiplicities.
fn squarefree(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree(&f.pth_root()) {
            out.push((g, m * f.p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        for (g, m) in squarefree(&c.pth_root()) {
            out.push((g, m * f.p as u32));
        }
    }
    out
}

/// Degrees of the irreducible factors of a monic squarefree polynomial.
fn distinct_degree(f: &FpPoly) -> Vec<u32> {
    let p = f.p;
    let x = FpPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut d = 1usize;
    while rest.deg() >= 2 * d {
        h = h.powmod(p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            degrees.extend(std::iter::repeat_n(d as u32, g.deg() / d));
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
        }
        d += 1;
    }
    if rest.deg() > 0 {
        degrees.push(rest.deg() as u32);
    }
    degrees
}

/// Factorization pattern of `f mod p` as sorted `(degree, multiplicity)`,
/// one entry per distinct monic irreducible factor.
///
/// `p` must be prime and must not divide the leading coefficient.
pub fn factor_degrees_mod_p(ascending: &[u64], p: u64) -> Result<Vec<(u32, u32)>> {
    if p < 2 || p > u32::MAX as u64 {
        return Err(Error::invalid(format!("unsupported prime {p}")));
    }
    let f = FpPoly::new(ascending.to_vec(), p);
    if f.c.len() != ascending.len() || f.is_zero() {
        return Err(Error::invalid(format!("leading coefficient vanishes mod {p}")));
    }
    let mut out = Vec::new();
    for (g, m) in squarefree(&f.monic()) {
        for d in distinct_degree(&g) {
            out.push((d, m));
        }
    }
    out.sort_unstable();
    Ok(out)
}
