//! Finite groups as explicit multiplication tables.
//!
//! Groups are stored fully expanded: an order-n group is an n×n table of
//! element indices with identity and inverse data. Construction always
//! validates the group axioms — identity, two-sided inverses, and
//! associativity via Light's test over a generating set, which is a
//! complete check (if associativity holds on a generating set whose
//! closure is the whole table, it holds everywhere).
//!
//! All structural operations (conjugacy classes, center, Sylow subgroups,
//! exponent) are plain table scans; at the orders this crate targets
//! (≤ ~5000) they are instantaneous and trivially correct.

mod families;

pub use families::{build_group, GroupSpec};

use std::fmt;

use thiserror::Error;

use crate::arith;

/// Hard cap on group order; beyond this the table representation stops
/// being reasonable.
pub const MAX_ORDER: usize = 5040;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("bad group spec `{0}`: expected C:n, A:m1,m2,..., D:n, S:n, Q8, GL2:q, SL2:q, F:p or file:<path>")]
    BadSpec(String),
    #[error("invalid parameter for {family}: {reason}")]
    BadParameter { family: &'static str, reason: String },
    #[error("group order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("not a group table: {0}")]
    NotAGroup(String),
    #[error("cannot parse group table: {0}")]
    BadTableFile(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("internal search failure: {0}")]
    Internal(String),
}

/// A finite group given by its complete multiplication table.
///
/// `table[i * order + j]` is the index of `g_i * g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
    label: String,
}

/// Partition of the element indices into conjugacy classes, listed in
/// increasing order of minimal element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }
}

/// A Sylow p-subgroup together with normality and, when abelian, its
/// cyclic decomposition (factor orders p^{t_1} ≥ … ≥ p^{t_s}).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub elements: Vec<usize>,
    pub normal: bool,
    pub abelian_factor_orders: Option<Vec<u64>>,
}

impl SylowSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Cyclic factor exponents t_1 ≥ … ≥ t_s (p^{t_i} the factor orders),
    /// present only when the subgroup is abelian.
    pub fn abelian_factor_exponents(&self) -> Option<Vec<u32>> {
        self.abelian_factor_orders
            .as_ref()
            .map(|orders| orders.iter().map(|&o| arith::p_adic(o, self.prime).0).collect())
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, validating the
    /// group axioms. The identity is deduced from the table.
    pub fn from_table(label: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if order > MAX_ORDER {
            return Err(GroupError::OrderTooLarge(order));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(GroupError::NotAGroup(format!(
                        "entry {v} out of range in row {i}"
                    )));
                }
                flat.push(v as u32);
            }
        }
        Self::from_flat_table(label, order, flat)
    }

    fn from_flat_table(label: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self, GroupError> {
        let at = |i: usize, j: usize| table[i * order + j] as usize;
        // identity: the unique e with e*j = j and i*e = i for all i, j
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| at(e, j) == j) && (0..order).all(|i| at(i, e) == i))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity".into()))?;
        let mut inverses = vec![0u32; order];
        for i in 0..order {
            let j = (0..order)
                .find(|&j| at(i, j) == identity && at(j, i) == identity)
                .ok_or_else(|| GroupError::NotAGroup(format!("element {i} has no two-sided inverse")))?;
            inverses[i] = j as u32;
        }
        // Light's associativity test over a generating set.
        let gens = generating_set(order, &table);
        for &a in &gens {
            for x in 0..order {
                let xa = at(x, a);
                for y in 0..order {
                    if at(xa, y) != at(x, at(a, y)) {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails at ({x}, {a}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order, table, identity, inverses, label: label.into() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses[i] as usize
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Order of a single element.
    pub fn element_order(&self, i: usize) -> u64 {
        let mut x = i;
        let mut n = 1u64;
        while x != self.identity {
            x = self.mul(x, i);
            n += 1;
        }
        n
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, i| arith::lcm_u64(acc, self.element_order(i)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Conjugacy classes under x ~ g x g⁻¹.
    pub fn conjugacy_classes(&self) -> ConjugacyPartition {
        let mut class_of = vec![usize::MAX; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..self.order {
                let y = self.mul(self.mul(g, x), self.inv(g));
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        ConjugacyPartition { classes, class_of }
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&z| (0..self.order).all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    /// Closure of a seed set under multiplication (always contains the
    /// identity); returned sorted.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut members = vec![self.identity];
        let mut queue: Vec<usize> = Vec::new();
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            // products with all current members, both sides
            let snapshot: Vec<usize> = members.clone();
            for &b in &snapshot {
                for p in [self.mul(a, b), self.mul(b, a)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        members.push(p);
                        queue.push(p);
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// A Sylow p-subgroup.
    ///
    /// When the set S of all p-power-order elements is closed under the
    /// table, S is the unique (hence normal) Sylow p-subgroup. Otherwise a
    /// Sylow subgroup is found by deterministic incremental closure search
    /// (seeds in element-index order) and flagged `normal = false`.
    ///
    /// If p does not divide the order, the trivial subgroup is returned
    /// with `normal = true`.
    pub fn sylow_subgroup(&self, p: u64) -> Result<SylowSubgroup, GroupError> {
        if !arith::is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let (e, _) = arith::p_adic(self.order as u64, p);
        if e == 0 {
            return Ok(SylowSubgroup {
                prime: p,
                elements: vec![self.identity],
                normal: true,
                abelian_factor_orders: Some(Vec::new()),
            });
        }
        let p_part = p.pow(e);
        let p_elems: Vec<usize> = (0..self.order)
            .filter(|&i| {
                let o = self.element_order(i);
                arith::p_adic(o, p).1 == 1
            })
            .collect();
        let closed = p_elems.iter().all(|&a| {
            p_elems.iter().all(|&b| {
                let ab = self.mul(a, b);
                let o = self.element_order(ab);
                arith::p_adic(o, p).1 == 1
            })
        });
        let (elements, normal) = if closed {
            if p_elems.len() as u64 != p_part {
                return Err(GroupError::Internal(format!(
                    "closed p-element set has size {} != p-part {p_part}",
                    p_elems.len()
                )));
            }
            (p_elems, true)
        } else {
            (self.find_sylow(&p_elems, p_part)?, false)
        };
        let abelian = elements
            .iter()
            .all(|&a| elements.iter().all(|&b| self.mul(a, b) == self.mul(b, a)));
        let abelian_factor_orders = abelian.then(|| self.abelian_p_factors(&elements, p));
        Ok(SylowSubgroup { prime: p, elements, normal, abelian_factor_orders })
    }

    /// Greedy closure search for a Sylow subgroup when it is not unique.
    /// Every proper p-subgroup extends to a larger one inside some Sylow
    /// subgroup, so the greedy walk always reaches full p-part order.
    fn find_sylow(&self, p_elems: &[usize], p_part: u64) -> Result<Vec<usize>, GroupError> {
        let mut current = vec![self.identity];
        while (current.len() as u64) < p_part {
            let mut extended = false;
            for &g in p_elems {
                if current.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seed = current.clone();
                seed.push(g);
                let closure = self.subgroup_closure(&seed);
                let size = closure.len() as u64;
                if size <= p_part && p_part % size == 0 {
                    current = closure;
                    extended = true;
                    break;
                }
            }
            if !extended {
                return Err(GroupError::Internal(
                    "sylow search could not extend a p-subgroup".into(),
                ));
            }
        }
        Ok(current)
    }

    /// Cyclic decomposition factor orders of an abelian p-subgroup,
    /// largest first. Uses the order-counting invariant: the number of
    /// factors of order ≥ p^k is log_p #{x : x^{p^k} = e} − log_p #{x : x^{p^{k-1}} = e}.
    fn abelian_p_factors(&self, elements: &[usize], p: u64) -> Vec<u64> {
        if elements.len() == 1 {
            return Vec::new();
        }
        let orders: Vec<u64> = elements.iter().map(|&x| self.element_order(x)).collect();
        let max_e = orders.iter().map(|&o| arith::p_adic(o, p).0).max().unwrap_or(0);
        // c[k] = log_p #{x in P : ord(x) divides p^k}
        let mut c = vec![0u32; (max_e + 2) as usize];
        for k in 0..=max_e + 1 {
            let cnt = orders
                .iter()
                .filter(|&&o| {
                    let (oe, om) = arith::p_adic(o, p);
                    om == 1 && oe <= k
                })
                .count() as u64;
            let mut log = 0u32;
            let mut v = cnt;
            while v > 1 {
                debug_assert_eq!(v % p, 0);
                v /= p;
                log += 1;
            }
            c[k as usize] = log;
        }
        let mut factors = Vec::new();
        for k in 1..=max_e {
            let at_least_k = c[k as usize] - c[(k - 1) as usize];
            let at_least_k1 = c[(k + 1) as usize] - c[k as usize];
            for _ in 0..(at_least_k - at_least_k1) {
                factors.push(p.pow(k));
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        factors
    }

    /// Full cubic associativity check. Light's test at construction is
    /// already complete; this is the O(n³) definitional check used as an
    /// independent oracle in tests.
    pub fn check_associativity_cubic(&self) -> Result<(), (usize, usize, usize)> {
        for i in 0..self.order {
            for j in 0..self.order {
                let ij = self.mul(i, j);
                for l in 0..self.order {
                    if self.mul(ij, l) != self.mul(i, self.mul(j, l)) {
                        return Err((i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    /// Parses the group table text format: line 1 is the order n, then n
    /// lines of n space-separated 0-based indices (row i lists g_i · g_j).
    pub fn parse_table(label: impl Into<String>, text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let first = lines.next().ok_or_else(|| GroupError::BadTableFile("empty file".into()))?;
        let order: usize = first
            .trim()
            .parse()
            .map_err(|_| GroupError::BadTableFile(format!("bad order line `{first}`")))?;
        if order == 0 {
            return Err(GroupError::BadTableFile("order must be positive".into()));
        }
        let mut rows = Vec::with_capacity(order);
        for i in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| GroupError::BadTableFile(format!("missing row {i}")))?;
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| GroupError::BadTableFile(format!("bad entry in row {i}")))?;
            rows.push(row);
        }
        if lines.next().is_some() {
            return Err(GroupError::BadTableFile("trailing content after table".into()));
        }
        Self::from_table(label, rows)
    }

    /// Renders the group in the table text format.
    pub fn format_table(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Greedy generating set: repeatedly adds the smallest element outside the
/// closure of what has been picked so far.
fn generating_set(order: usize, table: &[u32]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut covered = vec![false; order];
    loop {
        let Some(next) = covered.iter().position(|&c| !c) else {
            return gens;
        };
        gens.push(next);
        // closure of gens under the raw table operation
        covered.iter_mut().for_each(|c| *c = false);
        let mut members: Vec<usize> = Vec::new();
        for &g in &gens {
            if !covered[g] {
                covered[g] = true;
                members.push(g);
            }
        }
        let mut head = 0;
        while head < members.len() {
            let a = members[head];
            head += 1;
            let snapshot_len = members.len();
            for idx in 0..snapshot_len {
                let b = members[idx];
                for p in [table[a * order + b] as usize, table[b * order + a] as usize] {
                    if !covered[p] {
                        covered[p] = true;
                        members.push(p);
                    }
                }
            }
        }
    }
}
