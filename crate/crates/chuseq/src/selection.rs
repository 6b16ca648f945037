//! Selecting partial Chu sequence sets under a maximum cross-correlation
//! budget.
//!
//! A pair of roots is admissible at squared budget theta_sq when
//! gcd(r - s, n) * n <= theta_sq; the comparison is integer-exact. The plan
//! computes the divisor set X of all divisors of n above theta_sq/n, the
//! cardinality bounds derived from it, and two selectors: a deterministic
//! class-wise constructive search and an exhaustive branch-and-bound maximum
//! clique for conjecture testing at small n.

use std::fmt;

use crate::numtheory::{divisors, euler_phi, gcd};
use crate::{Error, Result};

/// Work budget for the constructive search: candidate visits plus pairwise
/// admissibility probes. The attainment conjecture is unproven, so the
/// search must terminate regardless.
const SEARCH_WORK_BUDGET: u64 = 1_000_000;

/// Cap for the exhaustive clique search; beyond this the combinatorics blow up.
const EXHAUSTIVE_CAP: u64 = 200;

fn is_unit(n: u64, a: u64) -> bool {
    a > 0 && a < n && gcd(a as i64, n as i64) == 1
}

fn pair_ok(n: u64, a: u64, b: u64, theta_sq: u64) -> bool {
    let g = gcd(a as i64 - b as i64, n as i64);
    (g as u128) * (n as u128) <= theta_sq as u128
}

fn validate_root(n: u64, root: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    if root == 0 || root >= n {
        return Err(Error::RootOutOfRange { root, n });
    }
    if gcd(root as i64, n as i64) != 1 {
        return Err(Error::RootNotCoprime { root, n });
    }
    Ok(())
}

fn validate_budget(n: u64, theta_sq: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    let t = theta_sq as u128;
    if t < n as u128 || t > (n as u128) * (n as u128) {
        return Err(Error::BudgetOutOfRange { theta_sq, n });
    }
    Ok(())
}

/// True iff the two roots can share a set at the given squared budget:
/// gcd(r - s, n) * n <= theta_sq, evaluated exactly on integers.
pub fn admissible_pair(n: u64, r: u64, s: u64, theta_sq: u64) -> Result<bool> {
    validate_root(n, r)?;
    validate_root(n, s)?;
    Ok(pair_ok(n, r, s, theta_sq))
}

/// How a selection was produced and whether the search ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionStatus {
    /// Bounds computed; no construction attempted.
    BoundsOnly,
    /// The constructive search filled every residue class: |selected| equals
    /// the upper bound.
    UpperBoundReached,
    /// The search space was explored completely without reaching the upper
    /// bound; `selected` holds the proven-largest class-wise set.
    SearchExhausted,
    /// The work budget ran out; `selected` holds the best set found so far.
    BudgetExhausted,
}

impl fmt::Display for SelectionStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelectionStatus::BoundsOnly => "bounds-only",
            SelectionStatus::UpperBoundReached => "achieved",
            SelectionStatus::SearchExhausted => "search-exhausted",
            SelectionStatus::BudgetExhausted => "budget-exhausted",
        })
    }
}

/// Budgeted selection state: the divisor set X, the bounds it implies, and
/// (after construction) the selected root set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionPlan {
    n: u64,
    theta_sq: u64,
    candidate_divisors: Vec<u64>,
    x_min: u64,
    x_phi_min: u64,
    lower_bound: u64,
    upper_bound: u64,
    selected: Vec<u64>,
    status: SelectionStatus,
}

impl SelectionPlan {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn theta_sq(&self) -> u64 {
        self.theta_sq
    }

    /// Divisors of n strictly above theta_sq/n (n itself always included).
    pub fn candidate_divisors(&self) -> &[u64] {
        &self.candidate_divisors
    }

    pub fn x_min(&self) -> u64 {
        self.x_min
    }

    /// The candidate divisor of minimum totient (smallest on ties).
    pub fn x_phi_min(&self) -> u64 {
        self.x_phi_min
    }

    pub fn lower_bound(&self) -> u64 {
        self.lower_bound
    }

    pub fn upper_bound(&self) -> u64 {
        self.upper_bound
    }

    /// Selected roots, ascending; empty until constructed.
    pub fn selected(&self) -> &[u64] {
        &self.selected
    }

    pub fn status(&self) -> SelectionStatus {
        self.status
    }
}

/// Computes the divisor set and cardinality bounds for a squared budget in
/// [n, n^2]; the selection itself is left empty.
pub fn plan(n: u64, theta_sq: u64) -> Result<SelectionPlan> {
    validate_budget(n, theta_sq)?;
    let candidate_divisors: Vec<u64> = divisors(n)?
        .into_iter()
        .filter(|&x| x == n || (x as u128) * (n as u128) > theta_sq as u128)
        .collect();
    let x_min = candidate_divisors[0];
    let mut x_phi_min = x_min;
    let mut upper_bound = euler_phi(x_min)?;
    for &x in &candidate_divisors[1..] {
        let phi = euler_phi(x)?;
        if phi < upper_bound {
            upper_bound = phi;
            x_phi_min = x;
        }
    }
    let lower_bound = (1..x_min).filter(|&m| gcd(m as i64, n as i64) == 1).count() as u64;
    Ok(SelectionPlan {
        n,
        theta_sq,
        candidate_divisors,
        x_min,
        x_phi_min,
        lower_bound,
        upper_bound,
        selected: Vec::new(),
        status: SelectionStatus::BoundsOnly,
    })
}

struct ClassSearch {
    n: u64,
    theta_sq: u64,
    classes: Vec<Vec<u64>>,
    work: u64,
    best: Vec<u64>,
    out_of_budget: bool,
}

impl ClassSearch {
    fn charge(&mut self, units: u64) -> bool {
        self.work += units;
        if self.work > SEARCH_WORK_BUDGET {
            self.out_of_budget = true;
        }
        self.out_of_budget
    }

    /// Depth-first over residue classes; returns true once every class holds
    /// a pick (the upper bound is attained). On success `chosen` is left
    /// filled.
    fn dfs(&mut self, class_idx: usize, chosen: &mut Vec<u64>) -> bool {
        if self.out_of_budget {
            return false;
        }
        if class_idx == self.classes.len() {
            return chosen.len() == self.classes.len();
        }
        for ci in 0..self.classes[class_idx].len() {
            let cand = self.classes[class_idx][ci];
            if self.charge(1 + chosen.len() as u64) {
                return false;
            }
            if chosen.iter().all(|&p| pair_ok(self.n, p, cand, self.theta_sq)) {
                chosen.push(cand);
                if chosen.len() > self.best.len() {
                    self.best = chosen.clone();
                }
                if self.dfs(class_idx + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        // No pick completed this class, so the upper bound is out of reach on
        // this branch; skip the class if that could still improve the best.
        if chosen.len() + (self.classes.len() - class_idx - 1) > self.best.len() {
            self.dfs(class_idx + 1, chosen);
        }
        false
    }
}

/// Builds a set by picking, for each residue class coprime to x_phi_min in
/// ascending order, the smallest admissible unit of the form
/// m * x_phi_min + residue, backtracking within the work budget when a class
/// cannot be filled.
pub fn construct_set(n: u64, theta_sq: u64) -> Result<SelectionPlan> {
    let mut result = plan(n, theta_sq)?;
    let x = result.x_phi_min;
    let blocks = n / x;
    let classes: Vec<Vec<u64>> = (1..x)
        .filter(|&c| gcd(c as i64, x as i64) == 1)
        .map(|c| {
            (0..blocks)
                .map(|m| m * x + c)
                .filter(|&a| is_unit(n, a))
                .collect()
        })
        .collect();
    debug_assert_eq!(classes.len() as u64, result.upper_bound);

    let mut search = ClassSearch {
        n,
        theta_sq,
        classes,
        work: 0,
        best: Vec::new(),
        out_of_budget: false,
    };
    let mut chosen = Vec::new();
    let complete = search.dfs(0, &mut chosen);
    let (mut selected, status) = if complete {
        (chosen, SelectionStatus::UpperBoundReached)
    } else if search.out_of_budget {
        (search.best, SelectionStatus::BudgetExhausted)
    } else {
        (search.best, SelectionStatus::SearchExhausted)
    };
    selected.sort_unstable();
    debug_assert!(verify_set(n, &selected, theta_sq)?.ok);
    result.selected = selected;
    result.status = status;
    Ok(result)
}

/// A violation found by [`verify_set`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetViolation {
    /// A member is not a valid root for this length.
    NonUnit(u64),
    /// The lexicographically first inadmissible pair.
    Pair(u64, u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetCheck {
    pub ok: bool,
    pub violation: Option<SetViolation>,
}

/// Checks that every member is a unit and every pair is admissible,
/// reporting the first violation in ascending order.
pub fn verify_set(n: u64, set: &[u64], theta_sq: u64) -> Result<SetCheck> {
    if n < 2 {
        return Err(Error::LengthTooSmall(n));
    }
    let mut members = set.to_vec();
    members.sort_unstable();
    members.dedup();
    for &a in &members {
        if !is_unit(n, a) {
            return Ok(SetCheck {
                ok: false,
                violation: Some(SetViolation::NonUnit(a)),
            });
        }
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if !pair_ok(n, members[i], members[j], theta_sq) {
                return Ok(SetCheck {
                    ok: false,
                    violation: Some(SetViolation::Pair(members[i], members[j])),
                });
            }
        }
    }
    Ok(SetCheck {
        ok: true,
        violation: None,
    })
}

/// Fixed-capacity bitset over vertex indices.
#[derive(Clone, Debug)]
struct VertexSet {
    bits: Vec<u64>,
}

impl VertexSet {
    fn empty(order: usize) -> Self {
        Self {
            bits: vec![0; order.div_ceil(64)],
        }
    }

    fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        for i in 0..order {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.bits[i >> 6] |= 1 << (i & 63);
    }

    fn remove(&mut self, i: usize) {
        self.bits[i >> 6] &= !(1 << (i & 63));
    }

    fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Self) -> Self {
        Self {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn subtract(&mut self, other: &Self) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= !b;
        }
    }

    /// Clears every index below `k`.
    fn clear_below(&mut self, k: usize) {
        let word = k >> 6;
        for w in self.bits.iter_mut().take(word) {
            *w = 0;
        }
        if word < self.bits.len() {
            self.bits[word] &= !0u64 << (k & 63);
        }
    }

    fn first(&self) -> Option<usize> {
        for (wi, &w) in self.bits.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// Branch-and-bound maximum clique with a greedy coloring bound.
struct CliqueGraph {
    adj: Vec<VertexSet>,
}

impl CliqueGraph {
    /// Greedy coloring of the candidates; returns vertices grouped by color
    /// class with the color number per position (an upper bound on any
    /// clique within the prefix up to that position).
    fn color_sort(&self, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bound = Vec::with_capacity(order.capacity());
        let mut uncolored = cand.clone();
        let mut color = 0usize;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.subtract(&self.adj[v]);
                uncolored.remove(v);
                order.push(v);
                bound.push(color);
            }
        }
        (order, bound)
    }

    /// Largest clique size within `cand`, stopping early once `stop` is hit.
    fn max_clique_size(&self, cand: &VertexSet, stop: usize) -> usize {
        let mut best = 0;
        self.expand(cand, 0, &mut best, stop);
        best
    }

    fn expand(&self, cand: &VertexSet, depth: usize, best: &mut usize, stop: usize) {
        if *best >= stop {
            return;
        }
        if cand.is_empty() {
            if depth > *best {
                *best = depth;
            }
            return;
        }
        let (order, bound) = self.color_sort(cand);
        let mut remaining = cand.clone();
        for i in (0..order.len()).rev() {
            if depth + bound[i] <= *best {
                return;
            }
            let v = order[i];
            let next = remaining.and(&self.adj[v]);
            if next.is_empty() {
                if depth + 1 > *best {
                    *best = depth + 1;
                }
            } else {
                self.expand(&next, depth + 1, best, stop);
            }
            if *best >= stop {
                return;
            }
            remaining.remove(v);
        }
    }
}

/// Exhaustive maximum admissible set over the unit group, as the
/// lexicographically smallest maximum clique of the admissibility graph.
/// Capped at n <= 200.
pub fn max_set_exhaustive(n: u64, theta_sq: u64) -> Result<Vec<u64>> {
    if n > EXHAUSTIVE_CAP {
        return Err(Error::ExhaustiveCap {
            n,
            cap: EXHAUSTIVE_CAP,
        });
    }
    validate_budget(n, theta_sq)?;
    let roots: Vec<u64> = (1..n).filter(|&a| is_unit(n, a)).collect();
    let order = roots.len();
    let mut adj = vec![VertexSet::empty(order); order];
    for i in 0..order {
        for j in (i + 1)..order {
            if pair_ok(n, roots[i], roots[j], theta_sq) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let graph = CliqueGraph { adj };
    let all = VertexSet::full(order);
    let omega = graph.max_clique_size(&all, usize::MAX);

    // Fix the set element by element: accept the smallest vertex that still
    // extends to a maximum clique among the larger candidates.
    let mut chosen = Vec::with_capacity(omega);
    let mut cand = all;
    while chosen.len() < omega {
        let need = omega - chosen.len() - 1;
        let mut advanced = false;
        for v in cand.iter().collect::<Vec<_>>() {
            let mut rest = cand.and(&graph.adj[v]);
            rest.clear_below(v + 1);
            if graph.max_clique_size(&rest, need) >= need {
                chosen.push(v);
                cand = rest;
                advanced = true;
                break;
            }
            cand.remove(v);
        }
        debug_assert!(advanced, "a maximum clique extension must exist");
        if !advanced {
            break;
        }
    }
    Ok(chosen.into_iter().map(|i| roots[i]).collect())
}
