use std::fmt;

use crate::error::{domain, Result};

/// Largest field order supported by the table-driven arithmetic.
pub const MAX_ORDER: u32 = 64;

/// Fixed irreducible (Conway) moduli, keyed by `(p, m)`.
///
/// Coefficients run from the constant term upward and omit the leading 1:
/// `(2, 4) => [1, 1, 0, 0]` is `x^4 + x + 1`.
pub const MODULI: &[((u32, u32), &[u32])] = &[
    ((2, 2), &[1, 1]),             // x^2 + x + 1
    ((2, 3), &[1, 1, 0]),          // x^3 + x + 1
    ((2, 4), &[1, 1, 0, 0]),       // x^4 + x + 1
    ((2, 5), &[1, 0, 1, 0, 0]),    // x^5 + x^2 + 1
    ((2, 6), &[1, 1, 0, 1, 1, 0]), // x^6 + x^4 + x^3 + x + 1
    ((3, 2), &[2, 2]),             // x^2 + 2x + 2
    ((3, 3), &[1, 2, 0]),          // x^3 + 2x + 1
    ((5, 2), &[2, 4]),             // x^2 + 4x + 2
    ((7, 2), &[3, 6]),             // x^2 + 6x + 3
];

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    if !is_prime(p) {
        return None;
    }
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// The field GF(p^m) with table-driven arithmetic.
///
/// Element `x` encodes the polynomial whose base-`p` digits (least
/// significant first) are its coefficients; `0` and `1` are the additive and
/// multiplicative identities.
#[derive(Clone)]
pub struct FiniteField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FiniteField {
    pub fn new(q: u32) -> Result<Self> {
        let Some((p, m)) = prime_power(q) else {
            return domain(format!("{q} is not a prime power"));
        };
        if q > MAX_ORDER {
            return domain(format!("field order {q} exceeds the supported maximum {MAX_ORDER}"));
        }
        let modulus: Vec<u32> = if m == 1 {
            vec![0]
        } else {
            MODULI
                .iter()
                .find(|(key, _)| *key == (p, m))
                .map(|(_, c)| c.to_vec())
                .ok_or_else(|| crate::Error::InputDomain(format!("no modulus for GF({p}^{m})")))?
        };
        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(m as usize);
            let mut x = x;
            for _ in 0..m {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);

        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let sum: Vec<u32> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[(x * q + y) as usize] = encode(&sum) as u8;

                // Schoolbook product, then reduce by the monic modulus.
                let mut prod = vec![0u32; 2 * m as usize];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                for deg in (m as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    // x^m = -(modulus tail)
                    for (k, &mk) in modulus.iter().enumerate() {
                        let idx = deg - m as usize + k;
                        prod[idx] = (prod[idx] + (p - 1) * c % p * mk) % p;
                    }
                }
                mul[(x * q + y) as usize] = encode(&prod[..m as usize]) as u8;
            }
        }
        let neg = (0..q)
            .map(|x| (0..q).find(|&y| add[(x * q + y) as usize] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; n];
        for x in 1..q {
            match (1..q).find(|&y| mul[(x * q + y) as usize] == 1) {
                Some(y) => inv[x as usize] = y as u8,
                None => return domain(format!("modulus for GF({q}) is reducible")),
            }
        }
        Ok(Self {
            p,
            m,
            q,
            modulus,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Modulus coefficients (constant term first, leading 1 omitted).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        self.add[(x * self.q + y) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.mul[(x * self.q + y) as usize] as u32
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        self.neg[x as usize] as u32
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, x: u32) -> Option<u32> {
        (x != 0).then(|| self.inv[x as usize] as u32)
    }
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.m)
    }
}
