//! Arithmetic in GF(q) for the prime powers used by the incidence-graph
//! catalog: elements are polynomials over GF(p) packed base-p into `usize`.

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: usize,
    k: usize,
    q: usize,
    mul: Vec<usize>,
}

/// Monic irreducible polynomial of degree `k` over GF(p), lowest coefficient
/// first (leading 1 implied).
fn modulus(p: usize, k: usize) -> Option<&'static [usize]> {
    match (p, k) {
        (_, 1) => Some(&[]),
        (2, 2) => Some(&[1, 1]),       // x^2 + x + 1
        (2, 3) => Some(&[1, 1, 0]),    // x^3 + x + 1
        (3, 2) => Some(&[1, 0]),       // x^2 + 1
        (2, 4) => Some(&[1, 1, 0, 0]), // x^4 + x + 1
        _ => None,
    }
}

impl FiniteField {
    pub fn new(q: usize) -> Result<Self> {
        let (p, k) =
            prime_power(q).ok_or_else(|| Error::Domain(format!("{q} is not a prime power")))?;
        let m = modulus(p, k).ok_or_else(|| Error::Domain(format!("GF({q}) not supported")))?;
        let digits = |mut x: usize| {
            let mut d = vec![0; k];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let pack = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let mut prod = vec![0; 2 * k];
                for i in 0..k {
                    for j in 0..k {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                // Reduce using x^k = -(m_0 + m_1 x + ...).
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &mi) in m.iter().enumerate() {
                        prod[deg - k + i] = (prod[deg - k + i] + (p - mi) * c) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..k]);
            }
        }
        Ok(FiniteField { p, k, q, mul })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut k = 0;
    let mut x = q;
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    (x == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = FiniteField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(
                        (0..q).filter(|&b| f.mul(a, b) == 1).count(),
                        1,
                        "q={q} a={a}"
                    );
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(1).is_err());
    }
}
