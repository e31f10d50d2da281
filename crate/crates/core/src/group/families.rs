//! Named group families and the one-token grammar that names them.
//!
//! Grammar: `C:n`, `A:m1,m2,...`, `D:n` (dihedral of order 2n), `S:n`,
//! `Q8`, `GL2:q`, `SL2:q`, `F:p`, `file:<path>`. Every family is expanded
//! to a full multiplication table and validated through
//! [`FiniteGroup::from_table`].

use std::collections::HashMap;
use std::path::PathBuf;

use crate::arith;
use crate::group::{FiniteGroup, GroupError, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Multiplication table loaded from a file.
    TableFile(PathBuf),
    /// Cyclic group of order n.
    Cyclic(u64),
    /// Direct product Z_{m1} × … × Z_{ms}.
    Abelian(Vec<u64>),
    /// Dihedral group with n rotations (order 2n).
    Dihedral(u64),
    /// Symmetric group on n letters.
    Symmetric(u32),
    /// Quaternion group of order 8.
    Quaternion8,
    /// 2×2 invertible matrices over GF(q), q a prime power.
    Gl2(u64),
    /// 2×2 determinant-one matrices over GF(q).
    Sl2(u64),
    /// Frobenius group of order p(p−1): ⟨a, b : a^p = b^{p−1} = 1, b⁻¹ab = a^u⟩
    /// with u a generator of (Z/p)^*.
    Frobenius(u64),
}

impl GroupSpec {
    pub fn parse(s: &str) -> Result<GroupSpec, GroupError> {
        let s = s.trim();
        let bad = || GroupError::BadSpec(s.to_string());
        if let Some(path) = s.strip_prefix("file:") {
            if path.is_empty() {
                return Err(bad());
            }
            return Ok(GroupSpec::TableFile(PathBuf::from(path)));
        }
        let (head, tail) = match s.split_once(':') {
            Some((h, t)) => (h.to_ascii_uppercase(), Some(t)),
            None => (s.to_ascii_uppercase(), None),
        };
        let num = |t: Option<&str>| -> Result<u64, GroupError> {
            t.and_then(|x| x.trim().parse::<u64>().ok()).ok_or_else(bad)
        };
        match head.as_str() {
            "Q8" if tail.is_none() => Ok(GroupSpec::Quaternion8),
            "C" => Ok(GroupSpec::Cyclic(num(tail)?)),
            "D" => Ok(GroupSpec::Dihedral(num(tail)?)),
            "S" => Ok(GroupSpec::Symmetric(num(tail)? as u32)),
            "GL2" => Ok(GroupSpec::Gl2(num(tail)?)),
            "SL2" => Ok(GroupSpec::Sl2(num(tail)?)),
            "F" => Ok(GroupSpec::Frobenius(num(tail)?)),
            "A" => {
                let parts: Result<Vec<u64>, GroupError> = tail
                    .ok_or_else(bad)?
                    .split(',')
                    .map(|x| x.trim().parse::<u64>().map_err(|_| bad()))
                    .collect();
                let parts = parts?;
                if parts.is_empty() {
                    return Err(bad());
                }
                Ok(GroupSpec::Abelian(parts))
            }
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::TableFile(p) => write!(f, "file:{}", p.display()),
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Abelian(ms) => {
                let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                write!(f, "A:{}", parts.join(","))
            }
            GroupSpec::Dihedral(n) => write!(f, "D:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S:{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Gl2(q) => write!(f, "GL2:{q}"),
            GroupSpec::Sl2(q) => write!(f, "SL2:{q}"),
            GroupSpec::Frobenius(p) => write!(f, "F:{p}"),
        }
    }
}

/// Builds the group a spec names, fully validated.
pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::TableFile(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| GroupError::BadTableFile(format!("{}: {e}", path.display())))?;
            FiniteGroup::parse_table(format!("file:{}", path.display()), &text)
        }
        GroupSpec::Cyclic(n) => cyclic(*n),
        GroupSpec::Abelian(ms) => abelian(ms),
        GroupSpec::Dihedral(n) => dihedral(*n),
        GroupSpec::Symmetric(n) => symmetric(*n),
        GroupSpec::Quaternion8 => quaternion8(),
        GroupSpec::Gl2(q) => linear_2x2(*q, false),
        GroupSpec::Sl2(q) => linear_2x2(*q, true),
        GroupSpec::Frobenius(p) => frobenius(*p),
    }
}

fn check_order(order: u64, family: &'static str) -> Result<usize, GroupError> {
    if order == 0 {
        return Err(GroupError::BadParameter { family, reason: "order must be positive".into() });
    }
    if order > MAX_ORDER as u64 {
        return Err(GroupError::OrderTooLarge(order as usize));
    }
    Ok(order as usize)
}

fn finish(label: String, order: usize, table: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    debug_assert_eq!(table.len(), order);
    FiniteGroup::from_table(label, table)
}

fn cyclic(n: u64) -> Result<FiniteGroup, GroupError> {
    let order = check_order(n, "cyclic")?;
    let table = (0..order).map(|i| (0..order).map(|j| (i + j) % order).collect()).collect();
    finish(format!("C:{n}"), order, table)
}

fn abelian(ms: &[u64]) -> Result<FiniteGroup, GroupError> {
    if ms.iter().any(|&m| m == 0) {
        return Err(GroupError::BadParameter {
            family: "abelian",
            reason: "all factors must be positive".into(),
        });
    }
    let order_u64 = ms.iter().try_fold(1u64, |acc, &m| acc.checked_mul(m)).unwrap_or(u64::MAX);
    let order = check_order(order_u64, "abelian")?;
    // mixed-radix digits, least significant factor last
    let digits = |mut idx: usize| -> Vec<usize> {
        let mut d = vec![0usize; ms.len()];
        for (k, &m) in ms.iter().enumerate().rev() {
            d[k] = idx % m as usize;
            idx /= m as usize;
        }
        d
    };
    let index = |d: &[usize]| -> usize {
        d.iter().zip(ms).fold(0usize, |acc, (&x, &m)| acc * m as usize + x)
    };
    let table = (0..order)
        .map(|i| {
            let di = digits(i);
            (0..order)
                .map(|j| {
                    let dj = digits(j);
                    let sum: Vec<usize> = di
                        .iter()
                        .zip(&dj)
                        .zip(ms)
                        .map(|((&a, &b), &m)| (a + b) % m as usize)
                        .collect();
                    index(&sum)
                })
                .collect()
        })
        .collect();
    let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    finish(format!("A:{}", parts.join(",")), order, table)
}

/// Dihedral group: elements r^i (index i) and r^i s (index n+i), with
/// s r = r⁻¹ s.
fn dihedral(n: u64) -> Result<FiniteGroup, GroupError> {
    let rot = check_order(n, "dihedral")?;
    let order = check_order(2 * n, "dihedral")?;
    let idx = |i: usize, flip: bool| if flip { rot + i } else { i };
    let table = (0..order)
        .map(|a| {
            let (i, e) = if a < rot { (a, false) } else { (a - rot, true) };
            (0..order)
                .map(|b| {
                    let (j, f) = if b < rot { (b, false) } else { (b - rot, true) };
                    // (r^i s^e)(r^j s^f) = r^{i + (-1)^e j} s^{e xor f}
                    let k = if e { (i + rot - j % rot) % rot } else { (i + j) % rot };
                    idx(k, e ^ f)
                })
                .collect()
        })
        .collect();
    finish(format!("D:{n}"), order, table)
}

fn symmetric(n: u32) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::BadParameter {
            family: "symmetric",
            reason: "n must be at least 1".into(),
        });
    }
    let mut fact = 1u64;
    for k in 1..=n as u64 {
        fact = fact.saturating_mul(k);
    }
    let order = check_order(fact, "symmetric")?;
    // all permutations of 0..n in lexicographic one-line order
    let mut perms: Vec<Vec<u8>> = Vec::with_capacity(order);
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        perms.push(current.clone());
        if !next_permutation(&mut current) {
            break;
        }
    }
    debug_assert_eq!(perms.len(), order);
    let index: HashMap<Vec<u8>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    // (a·b)(x) = a(b(x))
                    let prod: Vec<u8> = (0..n as usize).map(|x| a[b[x] as usize]).collect();
                    index[&prod]
                })
                .collect()
        })
        .collect();
    finish(format!("S:{n}"), order, table)
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Quaternion units ±1, ±i, ±j, ±k; index = 2·axis + sign with axes
/// ordered (1, i, j, k).
fn quaternion8() -> Result<FiniteGroup, GroupError> {
    // axis_mul[a][b] = (sign, axis) for unit product, axes 0=1, 1=i, 2=j, 3=k
    const AXIS_MUL: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = (0..8)
        .map(|a| {
            let (ax_a, neg_a) = (a / 2, a % 2 == 1);
            (0..8)
                .map(|b| {
                    let (ax_b, neg_b) = (b / 2, b % 2 == 1);
                    let (neg, ax) = AXIS_MUL[ax_a][ax_b];
                    let sign = neg ^ neg_a ^ neg_b;
                    2 * ax + usize::from(sign)
                })
                .collect()
        })
        .collect();
    finish("Q8".into(), 8, table)
}

fn frobenius(p: u64) -> Result<FiniteGroup, GroupError> {
    if !arith::is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::BadParameter {
            family: "frobenius",
            reason: "p must be an odd prime (order p(p-1) with nontrivial action)".into(),
        });
    }
    let order = check_order(p * (p - 1), "frobenius")?;
    let u = arith::primitive_root(p);
    // b a b⁻¹ = a^w with w = u⁻¹, so that b⁻¹ a b = a^u
    let w = arith::mod_inv(u, p).expect("unit mod p");
    let m = (p - 1) as usize;
    let idx = |i: u64, j: u64| (i as usize) * m + j as usize;
    let table = (0..order)
        .map(|a| {
            let (i, j) = ((a / m) as u64, (a % m) as u64);
            let twist = arith::mod_pow(w, j, p);
            (0..order)
                .map(|b| {
                    let (k, l) = ((b / m) as u64, (b % m) as u64);
                    // (a^i b^j)(a^k b^l) = a^{i + k·w^j} b^{j+l}
                    let i2 = (i + arith::mod_mul(k, twist, p)) % p;
                    let j2 = (j + l) % (p - 1);
                    idx(i2, j2)
                })
                .collect()
        })
        .collect();
    finish(format!("F:{p}[u={u}]"), order, table)
}

// ---------------------------------------------------------------------------
// GF(p^k) arithmetic for the matrix-group families.
// ---------------------------------------------------------------------------

/// A small prime-power field GF(p^k). Elements are indices 0..p^k, the
/// base-p digits of an index being the coefficients of a polynomial in the
/// generator. Reduction is modulo a fixed irreducible polynomial: the
/// lexicographically smallest monic irreducible of degree k over GF(p),
/// recorded in [`Gfq::poly_label`] for reproducibility.
pub(crate) struct Gfq {
    p: u64,
    k: u32,
    size: u64,
    /// Monic irreducible modulus, coefficients low to high, length k+1.
    modulus: Vec<u64>,
}

impl Gfq {
    pub fn new(q: u64) -> Result<Gfq, GroupError> {
        let (p, k) = arith::prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            find_irreducible(p, k)
        };
        Ok(Gfq { p, k, size: q, modulus })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut d = vec![0u64; self.k as usize];
        for v in d.iter_mut() {
            *v = x % self.p;
            x /= self.p;
        }
        d
    }

    fn from_digits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0u64, |acc, &v| acc * self.p + v)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce modulo the monic modulus
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (j, &m) in self.modulus.iter().enumerate().take(k) {
                let pos = deg - k + j;
                prod[pos] = (prod[pos] + c * (self.p - m) % self.p) % self.p;
            }
        }
        self.from_digits(&prod[..k])
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn poly_label(&self) -> String {
        if self.k == 1 {
            return format!("GF({})", self.p);
        }
        let mut terms = Vec::new();
        for (deg, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (deg, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (d, 1) => format!("x^{d}"),
                (d, c) => format!("{c}x^{d}"),
            };
            terms.push(t);
        }
        format!("GF({})[x]/({})", self.p, terms.join("+"))
    }
}

/// Lexicographically smallest monic irreducible polynomial of degree k
/// over GF(p), found by trial division against all lower-degree monic
/// polynomials.
fn find_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let count = p.pow(k as u32);
    'cand: for code in 0..count {
        let mut poly = vec![0u64; k + 1];
        let mut c = code;
        for v in poly.iter_mut().take(k) {
            *v = c % p;
            c /= p;
        }
        poly[k] = 1;
        for d in 1..=k / 2 {
            let divisors = p.pow(d as u32);
            for dcode in 0..divisors {
                let mut div = vec![0u64; d + 1];
                let mut c = dcode;
                for v in div.iter_mut().take(d) {
                    *v = c % p;
                    c /= p;
                }
                div[d] = 1;
                if poly_divides(&div, &poly, p) {
                    continue 'cand;
                }
            }
        }
        return poly;
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

fn poly_divides(div: &[u64], poly: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = poly.to_vec();
    let d = div.len() - 1;
    while rem.len() > d {
        let lead = *rem.last().unwrap();
        let deg = rem.len() - 1;
        if lead != 0 {
            for (j, &c) in div.iter().enumerate() {
                let pos = deg - d + j;
                rem[pos] = (rem[pos] + lead * (p - c) % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

fn linear_2x2(q: u64, special: bool) -> Result<FiniteGroup, GroupError> {
    let gf = Gfq::new(q)?;
    let n = gf.size();
    let predicted = if special {
        n * n * n - n
    } else {
        n * n * n * n - n * n * n - n * n + n
    };
    let family: &'static str = if special { "SL2" } else { "GL2" };
    check_order(predicted, if special { "SL2" } else { "GL2" })?;
    // enumerate matrices (a, b; c, d) in lexicographic order of (a, b, c, d)
    let mut mats: Vec<[u64; 4]> = Vec::with_capacity(predicted as usize);
    let mut code_of: HashMap<[u64; 4], usize> = HashMap::with_capacity(predicted as usize);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let det = gf.sub(gf.mul(a, d), gf.mul(b, c));
                    let keep = if special { det == 1 } else { det != 0 };
                    if keep {
                        code_of.insert([a, b, c, d], mats.len());
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    if mats.len() as u64 != predicted {
        return Err(GroupError::Internal(format!(
            "{family}({q}) enumeration found {} elements, expected {predicted}",
            mats.len()
        )));
    }
    let order = mats.len();
    let table = mats
        .iter()
        .map(|x| {
            mats.iter()
                .map(|y| {
                    let prod = [
                        gf.add(gf.mul(x[0], y[0]), gf.mul(x[1], y[2])),
                        gf.add(gf.mul(x[0], y[1]), gf.mul(x[1], y[3])),
                        gf.add(gf.mul(x[2], y[0]), gf.mul(x[3], y[2])),
                        gf.add(gf.mul(x[2], y[1]), gf.mul(x[3], y[3])),
                    ];
                    code_of[&prod]
                })
                .collect()
        })
        .collect();
    let label = format!("{family}:{q}[{}]", gf.poly_label());
    finish(label, order, table)
}
