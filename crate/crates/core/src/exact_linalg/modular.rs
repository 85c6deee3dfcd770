//! Certified singularity testing for matrices too large for Bareiss.
//!
//! A nonzero determinant modulo a prime proves `det A != 0`. A rational
//! vector `x != 0` with `A x = 0`, checked in exact arithmetic, proves
//! `det A = 0`. Kernel vectors are found modulo word-sized primes and lifted
//! by Chinese remaindering plus rational reconstruction. Every verdict is
//! backed by one of these two certificates, or by an exact determinant when
//! lifting gives up.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::ExactMatrix;
use super::ops::determinant;
use super::rational::{denominator_lcm, from_bigint, Rational};
use crate::error::Result;

/// Primes just below 2^31; products of two residues fit in a `u64`.
pub const PRIMES: [u64; 12] = [
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549, 2147483543, 2147483497, 2147483489,
    2147483477, 2147483423, 2147483399,
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SingularityCertificate {
    /// `det A` is nonzero modulo `prime`, hence nonzero.
    NonzeroModPrime { prime: u64, det_mod_p: u64 },
    /// A nonzero rational kernel vector, verified exactly.
    KernelVector(Vec<Rational>),
    /// Lifting failed; the exact determinant was computed instead.
    ExactDeterminant(Rational),
}

impl SingularityCertificate {
    pub fn is_singular(&self) -> bool {
        match self {
            Self::NonzeroModPrime { .. } => false,
            Self::KernelVector(_) => true,
            Self::ExactDeterminant(d) => d.is_zero(),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

struct Echelon {
    rows: Vec<u64>,
    n: usize,
    pivots: Vec<usize>,
    det_mod_p: u64,
}

/// Row echelon form modulo `p` of the square matrix `m` (row-major).
fn echelon_mod_p(mut m: Vec<u64>, n: usize, p: u64) -> Echelon {
    let mut pivots = Vec::new();
    let mut det = 1u64;
    let mut r = 0;
    for c in 0..n {
        let Some(found) = (r..n).find(|&i| m[i * n + c] != 0) else {
            det = 0;
            continue;
        };
        if found != r {
            for j in 0..n {
                m.swap(r * n + j, found * n + j);
            }
            det = (p - det) % p;
        }
        let piv = m[r * n + c];
        det = det * piv % p;
        let piv_inv = inv_mod(piv, p);
        let (head, tail) = m.split_at_mut((r + 1) * n);
        let pivot_row = &head[r * n..];
        for row in tail.chunks_exact_mut(n) {
            let lead = row[c];
            if lead == 0 {
                continue;
            }
            let f = p - lead * piv_inv % p;
            for j in c..n {
                row[j] = (row[j] + f * pivot_row[j]) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let det_mod_p = if pivots.len() == n { det } else { 0 };
    Echelon { rows: m, n, pivots, det_mod_p }
}

/// A kernel vector of the echelon form with the first free column set to 1.
fn kernel_mod_p(e: &Echelon, p: u64) -> Option<(usize, Vec<u64>)> {
    let n = e.n;
    let free = (0..n).find(|c| !e.pivots.contains(c))?;
    let mut x = vec![0u64; n];
    x[free] = 1;
    for (r, &c) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[r * n..(r + 1) * n];
        let mut acc = 0u64;
        for j in c + 1..n {
            acc = (acc + row[j] * x[j]) % p;
        }
        x[c] = (p - acc) % p * inv_mod(row[c], p) % p;
    }
    Some((free, x))
}

/// Recovers `r/s` from `a mod m` with `|r|, s <= sqrt(m/2)`.
pub(crate) fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn crt_combine(acc: &mut [BigInt], modulus: &BigInt, residues: &[u64], p: u64) {
    let p_big = BigInt::from(p);
    let m_inv = BigInt::from(inv_mod(reduce(modulus, p), p));
    for (a, &r) in acc.iter_mut().zip(residues) {
        let diff = (BigInt::from(r) - &*a).mod_floor(&p_big);
        let k = (diff * &m_inv).mod_floor(&p_big);
        *a += k * modulus;
    }
}

/// Decides whether `a` is singular, returning the certificate that proves it.
pub fn certify_singularity(a: &ExactMatrix) -> Result<SingularityCertificate> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(SingularityCertificate::ExactDeterminant(Rational::one()));
    }
    let int_rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = a.row_slice(i);
            let l = from_bigint(denominator_lcm(row));
            row.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect();

    let mut lifted: Option<(usize, Vec<usize>, Vec<BigInt>, BigInt)> = None;
    for &p in &PRIMES {
        let flat: Vec<u64> = int_rows.iter().flat_map(|r| r.iter().map(|x| reduce(x, p))).collect();
        let e = echelon_mod_p(flat, n, p);
        if e.pivots.len() == n {
            return Ok(SingularityCertificate::NonzeroModPrime { prime: p, det_mod_p: e.det_mod_p });
        }
        let Some((free, x)) = kernel_mod_p(&e, p) else { continue };
        let (acc, modulus) = match &mut lifted {
            Some((f, piv, acc, modulus)) if *f == free && *piv == e.pivots => {
                crt_combine(acc, modulus, &x, p);
                *modulus *= p;
                (acc, modulus)
            }
            slot => {
                *slot = Some((free, e.pivots.clone(), x.iter().map(|&v| BigInt::from(v)).collect(), BigInt::from(p)));
                let (_, _, acc, modulus) = slot.as_mut().expect("just set");
                (acc, modulus)
            }
        };
        let candidate: Option<Vec<Rational>> = acc.iter().map(|v| rational_reconstruction(v, modulus)).collect();
        if let Some(kernel) = candidate {
            let scale = from_bigint(denominator_lcm(&kernel));
            let scaled: Vec<BigInt> = kernel.iter().map(|x| (x * &scale).to_integer()).collect();
            let in_kernel =
                int_rows.iter().all(|row| row.iter().zip(&scaled).map(|(r, x)| r * x).sum::<BigInt>().is_zero());
            if in_kernel && scaled.iter().any(|x| !x.is_zero()) {
                return Ok(SingularityCertificate::KernelVector(kernel));
            }
        }
    }
    Ok(SingularityCertificate::ExactDeterminant(determinant(a)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rational::{rat, ratio};

    #[test]
    fn primes_are_prime() {
        for p in PRIMES {
            let mut d = 2u64;
            while d * d <= p {
                assert_ne!(p % d, 0, "{p} divisible by {d}");
                d += 1;
            }
        }
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(PRIMES[0]);
        for (num, den) in [(3i64, 7i64), (-5, 11), (0, 1), (17, 16)] {
            let den_inv = inv_mod(reduce(&BigInt::from(den), PRIMES[0]), PRIMES[0]);
            let a = BigInt::from(reduce(&BigInt::from(num), PRIMES[0]) * den_inv % PRIMES[0]);
            assert_eq!(rational_reconstruction(&a, &m), Some(ratio(num, den)));
        }
    }

    #[test]
    fn certifies_both_ways() {
        let nonsingular = ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert!(!certify_singularity(&nonsingular).unwrap().is_singular());
        let singular = ExactMatrix::from_i64_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        let cert = certify_singularity(&singular).unwrap();
        assert!(cert.is_singular());
        if let SingularityCertificate::KernelVector(x) = cert {
            assert!(singular.mul_vec(&x).unwrap().iter().all(Zero::is_zero));
            assert!(x.iter().any(|v| !v.is_zero()));
        }
    }

    #[test]
    fn multiple_of_prime_is_not_fooled() {
        // det = PRIMES[0]: singular modulo the first prime only.
        let p = PRIMES[0] as i64;
        let a = ExactMatrix::from_i64_rows(&[[p, 0], [0, 1]]);
        assert!(!certify_singularity(&a).unwrap().is_singular());
        let half = ExactMatrix::new(1, 1, vec![ratio(1, 2)]).unwrap();
        assert!(!certify_singularity(&half).unwrap().is_singular());
        assert!(certify_singularity(&ExactMatrix::zeros(1, 1)).unwrap().is_singular());
        assert_eq!(determinant(&ExactMatrix::zeros(1, 1)).unwrap(), rat(0));
    }
}
