//! Exact free distance, extended row distances, and truncated weight
//! enumerators via the code's state diagram, plus an independent
//! brute-force oracle.
//!
//! The state diagram has q^delta states (the last delta message symbols);
//! an edge from state s under input u emits the next codeword coefficient
//! block and its Hamming weight. Because every generator entry has
//! constant coefficient 1, the n output coordinates under input u are
//! `t_j + u` for a per-state vector t, so all q edge weights of one state
//! come from a single histogram of t. The free distance is a pruned
//! nonnegative-weight shortest path from zero-state departure to
//! zero-state arrival; row distances come from a layered sweep over path
//! length; the enumerator propagates exact codeword counts by weight.
//!
//! States are ordered by their integer encoding (most recent symbol in
//! the lowest digit), which fixes traversal order and makes every result
//! reproducible.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::codebuild::ConvCode;
use crate::gf::FieldSpec;
use crate::polyalg::DensePoly;

/// Default cell budget for [`weight_enumerator`]: states x layers x weights.
pub const DEFAULT_ENUMERATOR_BUDGET: u64 = 200_000_000;
/// Default message budget for [`brute_force_distance`].
pub const DEFAULT_ORACLE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("j = {j} is smaller than the shortest atomic length {min_j}")]
    JTooSmall { j: usize, min_j: usize },
    #[error("budget exceeded: needs {need} {unit}, budget is {budget}")]
    BudgetExceeded {
        need: u64,
        unit: &'static str,
        budget: u64,
    },
    #[error("codeword count overflows u64")]
    CountOverflow,
}

/// True iff no run of at least `delta` consecutive zero coefficients
/// occurs strictly between the constant and the leading coefficient.
pub fn is_atomic(u: &DensePoly, delta: usize) -> bool {
    assert!(delta >= 1, "atomicity needs delta >= 1");
    let deg = match u.deg() {
        Some(d) => d,
        None => return true,
    };
    let mut run = 0usize;
    for i in 1..deg {
        if u.coeff_index(i) == 0 {
            run += 1;
            if run >= delta {
                return false;
            }
        } else {
            run = 0;
        }
    }
    true
}

/// Lower bound `(n-delta) j + delta (delta+1)` for the j-th extended row
/// distance; valid for delta < n and j >= delta+1.
pub fn slope_lower_bound(code: &ConvCode, j: usize) -> u64 {
    let (n, delta) = (code.n() as u64, code.delta() as u64);
    assert!(delta < n, "slope bound needs delta < n");
    assert!(j as u64 >= delta + 1, "slope bound needs j >= delta+1");
    (n - delta) * j as u64 + delta * (delta + 1)
}

/// Default enumeration depth for the oracle: the path-length bound from
/// the row-distance slope plus the memory, `ceil(n(delta+1)/(n-delta)) + delta`.
pub fn default_oracle_deg_bound(code: &ConvCode) -> usize {
    let (n, delta) = (code.n() as u64, code.delta() as u64);
    assert!(delta < n, "the default bound applies only for delta < n");
    (n * (delta + 1)).div_ceil(n - delta) as usize + code.delta()
}

// --- state graph ------------------------------------------------------------

/// The state diagram of a code: q^delta states, q edges per state.
///
/// Transitions are generated on the fly; nothing quadratic in the state
/// count is ever materialized.
pub struct StateGraph {
    spec: FieldSpec,
    q: usize,
    n: usize,
    delta: usize,
    num_states: usize,
    /// (delta+1) x n grid of generator coefficients: gmat[l*n + j] is the
    /// element index of the degree-l coefficient of entry j.
    gmat: Vec<u32>,
}

impl StateGraph {
    pub fn new(code: &ConvCode) -> StateGraph {
        let spec = code.spec().clone();
        let q = spec.q() as usize;
        let (n, delta) = (code.n(), code.delta());
        assert!(delta >= 1, "the state diagram is built for delta >= 1");
        assert!(q <= 4096, "graph distance computations are table-driven; q > 4096 unsupported");
        let num_states = q
            .checked_pow(delta as u32)
            .expect("state count overflows usize");
        let mut gmat = vec![0u32; (delta + 1) * n];
        for l in 0..=delta {
            for j in 0..n {
                gmat[l * n + j] = code.generator().entry(0, j).coeff_index(l) as u32;
            }
        }
        // The histogram trick below needs the constant coefficient row to
        // be all ones, which the construction guarantees.
        assert!(
            gmat[..n].iter().all(|&c| c as u64 == spec.one_i()),
            "state graph requires unit constant coefficients"
        );
        StateGraph {
            spec,
            q,
            n,
            delta,
            num_states,
            gmat,
        }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// All q edges leaving `state`: (input element index, successor,
    /// emitted weight). Intended for inspection and tests.
    pub fn edges_from(&self, state: usize) -> Vec<(u64, usize, u64)> {
        let w = Walker::new(self);
        let mut t = vec![0u32; self.n];
        w.t_full(state, &mut t);
        let mut cnt = vec![0u16; self.q];
        w.cnt_fill(&t, &mut cnt);
        (0..self.q)
            .map(|u| {
                (
                    u as u64,
                    w.successor(state, u),
                    w.weight(&cnt, u) as u64,
                )
            })
            .collect()
    }
}

/// Table-backed edge generator shared by the distance computations.
struct Walker<'a> {
    g: &'a StateGraph,
    add: Vec<u32>,
    qd1: usize,
    /// row[l0*q*n + v*n + j] = v * gmat[(l0+1)*n + j]
    row: Vec<u32>,
    /// negrow[..] = -(row[..])
    negrow: Vec<u32>,
    neg_of: Vec<u32>,
}

impl<'a> Walker<'a> {
    fn new(g: &'a StateGraph) -> Walker<'a> {
        let s = &g.spec;
        let (q, n, delta) = (g.q, g.n, g.delta);
        let mut add = vec![0u32; q * q];
        for a in 0..q as u64 {
            for b in 0..q as u64 {
                add[a as usize * q + b as usize] = s.add_i(a, b) as u32;
            }
        }
        let mut row = vec![0u32; delta * q * n];
        let mut negrow = vec![0u32; delta * q * n];
        for l0 in 0..delta {
            for v in 0..q as u64 {
                for j in 0..n {
                    let prod = s.mul_i(v, g.gmat[(l0 + 1) * n + j] as u64);
                    row[l0 * q * n + v as usize * n + j] = prod as u32;
                    negrow[l0 * q * n + v as usize * n + j] = s.neg_i(prod) as u32;
                }
            }
        }
        let neg_of = (0..q as u64).map(|v| s.neg_i(v) as u32).collect();
        Walker {
            g,
            add,
            qd1: if delta == 0 { 1 } else { q.pow(delta as u32 - 1) },
            row,
            negrow,
            neg_of,
        }
    }

    #[inline]
    fn addi(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.g.q + b as usize]
    }

    fn t_full(&self, state: usize, t: &mut [u32]) {
        t.fill(0);
        let mut s = state;
        for l0 in 0..self.g.delta {
            let v = s % self.g.q;
            s /= self.g.q;
            if v != 0 {
                let base = l0 * self.g.q * self.g.n + v * self.g.n;
                for (j, tj) in t.iter_mut().enumerate() {
                    *tj = self.addi(*tj, self.row[base + j]);
                }
            }
        }
    }

    /// Replace digit `l0`'s contribution after a change old -> new.
    #[inline]
    fn t_update(&self, l0: usize, old: usize, new: usize, t: &mut [u32]) {
        let n = self.g.n;
        let base_old = l0 * self.g.q * n + old * n;
        let base_new = l0 * self.g.q * n + new * n;
        for (j, tj) in t.iter_mut().enumerate() {
            *tj = self.addi(self.addi(*tj, self.negrow[base_old + j]), self.row[base_new + j]);
        }
    }

    #[inline]
    fn cnt_fill(&self, t: &[u32], cnt: &mut [u16]) {
        cnt.fill(0);
        for &v in t {
            cnt[v as usize] += 1;
        }
    }

    /// Weight of the edge under input u, given the state's histogram.
    #[inline]
    fn weight(&self, cnt: &[u16], u: usize) -> u32 {
        self.g.n as u32 - cnt[self.neg_of[u] as usize] as u32
    }

    #[inline]
    fn successor(&self, state: usize, u: usize) -> usize {
        u + (state % self.qd1) * self.g.q
    }

    /// Successor-base of a state: successors are base + u.
    #[inline]
    fn succ_base(&self, state: usize) -> usize {
        (state % self.qd1) * self.g.q
    }
}

/// Dense per-layer scan that keeps the t-vector of the current state up
/// to date with an odometer over the state digits.
struct Odometer {
    digits: Vec<usize>,
    t: Vec<u32>,
}

impl Odometer {
    fn new(w: &Walker) -> Odometer {
        Odometer {
            digits: vec![0; w.g.delta],
            t: vec![0u32; w.g.n],
        }
    }

    #[inline]
    fn advance(&mut self, w: &Walker) {
        for l0 in 0..self.digits.len() {
            let old = self.digits[l0];
            let new = if old + 1 == w.g.q { 0 } else { old + 1 };
            self.digits[l0] = new;
            w.t_update(l0, old, new, &mut self.t);
            if new != 0 {
                break;
            }
        }
    }
}

// --- free distance ----------------------------------------------------------

/// Exact free distance: minimum weight of a nonzero codeword.
///
/// Computed as the cheapest zero-to-zero path in the state diagram (the
/// zero-weight self-loop excluded), with a bucket queue over the integer
/// path weights and pruning at the best arrival found so far. The weight
/// of the generator row itself seeds the pruning threshold.
pub fn free_distance(code: &ConvCode) -> u64 {
    if code.delta() == 0 {
        let spec = code.spec();
        return (1..spec.q())
            .map(|c| {
                let s = spec.element_from_index(c);
                code.generator()
                    .row(0)
                    .iter()
                    .map(|e| e.scale(&s).weight())
                    .sum::<u64>()
            })
            .min()
            .expect("field has at least one nonzero element");
    }

    let g = StateGraph::new(code);
    let w = Walker::new(&g);
    let ub = code.generator_weight() as u32;
    let mut best = ub;
    let mut dist = vec![u32::MAX; g.num_states];
    let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); ub as usize + 1];

    let mut t = vec![0u32; g.n];
    let mut cnt = vec![0u16; g.q];

    // departures from the zero state (nonzero input only)
    w.t_full(0, &mut t);
    w.cnt_fill(&t, &mut cnt);
    for u in 1..g.q {
        let wt = w.weight(&cnt, u);
        let s2 = w.successor(0, u);
        if wt < best && wt < dist[s2] {
            dist[s2] = wt;
            buckets[wt as usize].push(s2 as u32);
        }
    }

    let mut d = 0u32;
    while d < best {
        let mut i = 0;
        while i < buckets[d as usize].len() {
            let s = buckets[d as usize][i] as usize;
            i += 1;
            if dist[s] != d {
                continue;
            }
            w.t_full(s, &mut t);
            w.cnt_fill(&t, &mut cnt);
            let base = w.succ_base(s);
            for u in 0..g.q {
                let nd = d + w.weight(&cnt, u);
                if nd >= best {
                    continue;
                }
                let s2 = base + u;
                if s2 == 0 {
                    best = nd;
                } else if nd < dist[s2] {
                    dist[s2] = nd;
                    buckets[nd as usize].push(s2 as u32);
                }
            }
        }
        buckets[d as usize].clear();
        d += 1;
    }
    best as u64
}

// --- extended row distances ---------------------------------------------------

/// The j-th extended row distance: minimum weight over paths that leave
/// the zero state at step 0 and first return to it at step j exactly.
pub fn extended_row_distance(code: &ConvCode, j: usize) -> Result<u64, DistanceError> {
    let all = extended_row_distances(code, j)?;
    Ok(*all.get(&j).expect("atomic codewords exist at every length"))
}

/// Extended row distances for every j in delta+1 ..= max_j, from one
/// layered sweep of the time-expanded state diagram (the zero state is
/// removed from the interior layers).
pub fn extended_row_distances(
    code: &ConvCode,
    max_j: usize,
) -> Result<BTreeMap<usize, u64>, DistanceError> {
    let delta = code.delta();
    assert!(delta >= 1, "row distances need delta >= 1");
    if max_j < delta + 1 {
        return Err(DistanceError::JTooSmall {
            j: max_j,
            min_j: delta + 1,
        });
    }
    let g = StateGraph::new(code);
    let w = Walker::new(&g);
    let mut cur = vec![u32::MAX; g.num_states];
    let mut cur_list: Vec<u32> = Vec::new();
    let mut t = vec![0u32; g.n];
    let mut cnt = vec![0u16; g.q];

    w.t_full(0, &mut t);
    w.cnt_fill(&t, &mut cnt);
    for u in 1..g.q {
        let s2 = w.successor(0, u);
        cur[s2] = w.weight(&cnt, u);
        cur_list.push(s2 as u32);
    }

    let mut out = BTreeMap::new();
    for layer in 1..max_j {
        let mut next = vec![u32::MAX; g.num_states];
        let mut next_list: Vec<u32> = Vec::new();
        let mut arrival = u32::MAX;

        let mut relax = |d: u32, s: usize, t: &[u32], cnt: &mut [u16]| {
            w.cnt_fill(t, cnt);
            let base = w.succ_base(s);
            for u in 0..g.q {
                let nd = d + w.weight(cnt, u);
                let s2 = base + u;
                if s2 == 0 {
                    if nd < arrival {
                        arrival = nd;
                    }
                } else if nd < next[s2] {
                    if next[s2] == u32::MAX {
                        next_list.push(s2 as u32);
                    }
                    next[s2] = nd;
                }
            }
        };

        // Sparse layers walk the reached list; dense layers scan all
        // states with an incrementally maintained t-vector.
        if cur_list.len() * 4 < g.num_states {
            for &s in &cur_list {
                let s = s as usize;
                w.t_full(s, &mut t);
                relax(cur[s], s, &t, &mut cnt);
            }
        } else {
            let mut odo = Odometer::new(&w);
            for s in 0..g.num_states {
                if cur[s] != u32::MAX {
                    relax(cur[s], s, &odo.t, &mut cnt);
                }
                if s + 1 < g.num_states {
                    odo.advance(&w);
                }
            }
        }

        let j = layer + 1;
        if j >= delta + 1 {
            assert!(
                arrival != u32::MAX,
                "no atomic codeword of length {} found",
                j
            );
            out.insert(j, arrival as u64);
        }
        cur = next;
        cur_list = next_list;
    }
    Ok(out)
}

// --- weight enumerator --------------------------------------------------------

/// Truncated weight distribution: for each atomic length j <= max_l, the
/// exact count of atomic codewords by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSeries {
    max_l: usize,
    terms: BTreeMap<usize, BTreeMap<u64, u64>>,
}

impl WeightSeries {
    pub fn max_l(&self) -> usize {
        self.max_l
    }

    pub fn terms(&self) -> &BTreeMap<usize, BTreeMap<u64, u64>> {
        &self.terms
    }

    pub fn term(&self, j: usize) -> Option<&BTreeMap<u64, u64>> {
        self.terms.get(&j)
    }

    /// Smallest weight appearing at length j.
    pub fn min_weight(&self, j: usize) -> Option<u64> {
        self.terms.get(&j).and_then(|m| m.keys().next().copied())
    }
}

/// Count atomic codewords by (length, weight) for all lengths <= max_l.
pub fn weight_enumerator(
    code: &ConvCode,
    max_l: usize,
    budget_cells: u64,
) -> Result<WeightSeries, DistanceError> {
    let delta = code.delta();
    assert!(max_l >= delta + 1, "max_l must be at least delta+1");

    if delta == 0 {
        // block code: the atomic codewords are the nonzero constant
        // multiples of the generator row, all of length 1
        let spec = code.spec();
        let mut term = BTreeMap::new();
        for c in 1..spec.q() {
            let s = spec.element_from_index(c);
            let wt: u64 = code
                .generator()
                .row(0)
                .iter()
                .map(|e| e.scale(&s).weight())
                .sum();
            *term.entry(wt).or_insert(0u64) += 1;
        }
        let mut terms = BTreeMap::new();
        terms.insert(1, term);
        return Ok(WeightSeries { max_l, terms });
    }

    let g = StateGraph::new(code);
    let w = Walker::new(&g);
    let wmax = g.n * max_l + 1;
    let cells = (g.num_states as u64)
        .checked_mul(max_l as u64)
        .and_then(|c| c.checked_mul(wmax as u64))
        .unwrap_or(u64::MAX);
    if cells > budget_cells {
        return Err(DistanceError::BudgetExceeded {
            need: cells,
            unit: "enumerator cells",
            budget: budget_cells,
        });
    }

    let mut cur = vec![0u64; g.num_states * wmax];
    let mut t = vec![0u32; g.n];
    let mut cnt = vec![0u16; g.q];

    w.t_full(0, &mut t);
    w.cnt_fill(&t, &mut cnt);
    for u in 1..g.q {
        let s2 = w.successor(0, u);
        cur[s2 * wmax + w.weight(&cnt, u) as usize] += 1;
    }

    let mut terms: BTreeMap<usize, BTreeMap<u64, u64>> = BTreeMap::new();
    for j in delta + 1..=max_l {
        terms.insert(j, BTreeMap::new());
    }

    for layer in 1..max_l {
        let mut next = vec![0u64; g.num_states * wmax];
        let j = layer + 1;
        for s in 0..g.num_states {
            let slab = &cur[s * wmax..(s + 1) * wmax];
            if slab.iter().all(|&c| c == 0) {
                continue;
            }
            w.t_full(s, &mut t);
            w.cnt_fill(&t, &mut cnt);
            let base = w.succ_base(s);
            for u in 0..g.q {
                let ew = w.weight(&cnt, u) as usize;
                let s2 = base + u;
                for (wt, &c) in slab.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    if s2 == 0 {
                        if j >= delta + 1 {
                            let entry = terms
                                .get_mut(&j)
                                .unwrap()
                                .entry((wt + ew) as u64)
                                .or_insert(0);
                            *entry = entry.checked_add(c).ok_or(DistanceError::CountOverflow)?;
                        }
                    } else {
                        let cell = &mut next[s2 * wmax + wt + ew];
                        *cell = cell.checked_add(c).ok_or(DistanceError::CountOverflow)?;
                    }
                }
            }
        }
        cur = next;
    }

    Ok(WeightSeries { max_l, terms })
}

// --- brute-force oracle ---------------------------------------------------------

/// Minimum weight of uG over all nonzero messages u with deg u <= deg_bound,
/// by direct enumeration and polynomial convolution. Independent of the
/// state-diagram machinery.
pub fn brute_force_distance(
    code: &ConvCode,
    deg_bound: usize,
    budget_messages: u64,
) -> Result<u64, DistanceError> {
    let spec = code.spec();
    let q = spec.q();
    let slots = deg_bound + 1;
    let total = q
        .checked_pow(slots as u32)
        .ok_or(DistanceError::BudgetExceeded {
            need: u64::MAX,
            unit: "messages",
            budget: budget_messages,
        })?;
    if total > budget_messages {
        return Err(DistanceError::BudgetExceeded {
            need: total,
            unit: "messages",
            budget: budget_messages,
        });
    }

    let n = code.n();
    let delta = code.delta();
    let gcols: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..=delta)
                .map(|l| code.generator().entry(0, j).coeff_index(l))
                .collect()
        })
        .collect();

    let mut u = vec![0u64; slots];
    let mut best = u64::MAX;
    for _ in 1..total {
        // odometer over message coefficients
        for slot in u.iter_mut() {
            if *slot + 1 == q {
                *slot = 0;
            } else {
                *slot += 1;
                break;
            }
        }
        let mut wt = 0u64;
        for col in gcols.iter() {
            for d in 0..slots + delta {
                let lo = d.saturating_sub(deg_bound);
                let hi = d.min(delta);
                let mut acc = 0u64;
                for l in lo..=hi {
                    acc = spec.add_i(acc, spec.mul_i(u[d - l], col[l]));
                }
                if acc != 0 {
                    wt += 1;
                }
            }
        }
        debug_assert!(wt > 0, "nonzero message produced a zero codeword");
        if wt < best {
            best = wt;
        }
    }
    Ok(best)
}

/// Count the atomic codewords of the shortest length delta+1 that have
/// weight exactly n(delta+1), together with the number of candidates.
/// Atomic codewords of that length are precisely the nonzero constant
/// multiples of the generator row.
pub fn minimum_weight_census(code: &ConvCode) -> (u64, u64) {
    let spec = code.spec();
    let target = (code.n() as u64) * (code.delta() as u64 + 1);
    let mut hits = 0;
    for c in 1..spec.q() {
        let s = spec.element_from_index(c);
        let wt: u64 = code
            .generator()
            .row(0)
            .iter()
            .map(|e| e.scale(&s).weight())
            .sum();
        if wt == target {
            hits += 1;
        }
    }
    (hits, spec.q() - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebuild::build_code;
    use crate::gf::{FieldSpec, OrderMode};

    fn code_gf4(delta: usize) -> ConvCode {
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let a = f4.find_element_of_order(3, OrderMode::Exact).unwrap();
        build_code(&f4, 3, delta, &a).unwrap()
    }

    fn code_gf8_n3_d2() -> ConvCode {
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        let a = f8.find_element_of_order(3, OrderMode::AtLeast).unwrap();
        assert_eq!(a.order().unwrap(), 7);
        build_code(&f8, 3, 2, &a).unwrap()
    }

    #[test]
    fn atomicity() {
        let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let p = |coeffs: Vec<u64>| DensePoly::from_indices(&f4, coeffs);
        // 1 + z with delta 2: no interior at all
        assert!(is_atomic(&p(vec![2, 2]), 2));
        // 1 + z^3 has two consecutive interior zeros
        assert!(!is_atomic(&p(vec![2, 0, 0, 2]), 2));
        assert!(is_atomic(&p(vec![2, 0, 0, 2]), 3));
        // constants are trivially atomic
        assert!(is_atomic(&p(vec![2]), 1));
    }

    #[test]
    fn state_graph_shape_and_invariants() {
        for code in [code_gf4(1), code_gf4(2)] {
            let g = StateGraph::new(&code);
            let q = code.spec().q() as usize;
            assert_eq!(g.num_states(), q.pow(code.delta() as u32));
            // zero-input self-loop at the zero state has weight 0
            let edges = g.edges_from(0);
            assert_eq!(edges.len(), q);
            assert_eq!(edges[0], (0, 0, 0));
            // every edge with a nonzero (input, state) pair weighs >= n - delta
            let floor = (code.n() - code.delta()) as u64;
            for s in 0..g.num_states() {
                for (u, s2, w) in g.edges_from(s) {
                    if s == 0 && u == 0 {
                        continue;
                    }
                    assert!(w >= floor, "edge ({s},{u})->{s2} weighs {w}");
                }
            }
        }
    }

    #[test]
    fn free_distance_examples() {
        // (3,1,1) over GF(4): n(delta+1) = 6
        assert_eq!(free_distance(&code_gf4(1)), 6);
        // repetition code
        assert_eq!(free_distance(&code_gf4(0)), 3);
        // (3,1,2) over GF(8), ord(alpha) = 7: 9
        assert_eq!(free_distance(&code_gf8_n3_d2()), 9);
    }

    #[test]
    fn row_distances_example_1() {
        let code = code_gf4(1);
        let d = extended_row_distances(&code, 8).unwrap();
        for j in 2..=8 {
            assert_eq!(d[&j], 2 + 2 * j as u64);
        }
        assert_eq!(
            extended_row_distance(&code, 1),
            Err(DistanceError::JTooSmall { j: 1, min_j: 2 })
        );
        // j = delta+1 gives n(delta+1) on every construction
        assert_eq!(d[&2], 6);
    }

    #[test]
    fn row_distances_example_3() {
        let code = code_gf4(2);
        let d = extended_row_distances(&code, 10).unwrap();
        for j in 3..=10 {
            assert_eq!(d[&j], 6 + j as u64, "j = {}", j);
        }
    }

    #[test]
    fn enumerator_example_1() {
        let code = code_gf4(1);
        let series = weight_enumerator(&code, 6, DEFAULT_ENUMERATOR_BUDGET).unwrap();
        for j in 2..=6usize {
            let term = series.term(j).unwrap();
            let expect: BTreeMap<u64, u64> =
                [((2 + 2 * j) as u64, 3u64.pow(j as u32 - 1))].into();
            assert_eq!(term, &expect, "term L^{}", j);
        }
        // consistency with the row distances
        let d = extended_row_distances(&code, 6).unwrap();
        for j in 2..=6usize {
            assert_eq!(series.min_weight(j).unwrap(), d[&j]);
        }
    }

    #[test]
    fn enumerator_example_3() {
        let code = code_gf4(2);
        let series = weight_enumerator(&code, 5, DEFAULT_ENUMERATOR_BUDGET).unwrap();
        assert_eq!(series.term(3).unwrap(), &BTreeMap::from([(9, 3)]));
        assert_eq!(series.term(4).unwrap(), &BTreeMap::from([(10, 9)]));
        assert_eq!(
            series.term(5).unwrap(),
            &BTreeMap::from([(11, 9), (13, 18), (14, 9)])
        );
    }

    #[test]
    fn enumerator_example_4_low_terms() {
        let code = code_gf8_n3_d2();
        let series = weight_enumerator(&code, 5, DEFAULT_ENUMERATOR_BUDGET).unwrap();
        assert_eq!(series.term(3).unwrap(), &BTreeMap::from([(9, 7)]));
        assert_eq!(series.term(4).unwrap(), &BTreeMap::from([(10, 21), (12, 28)]));
        assert_eq!(
            series.term(5).unwrap(),
            &BTreeMap::from([(12, 14), (13, 126), (14, 147), (15, 105)])
        );
    }

    #[test]
    fn enumerator_budget() {
        let code = code_gf4(2);
        assert!(matches!(
            weight_enumerator(&code, 5, 10),
            Err(DistanceError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn enumerator_repetition_code() {
        let code = code_gf4(0);
        let series = weight_enumerator(&code, 3, DEFAULT_ENUMERATOR_BUDGET).unwrap();
        assert_eq!(series.term(1).unwrap(), &BTreeMap::from([(3, 3)]));
    }

    #[test]
    fn oracle_agrees() {
        let code = code_gf4(1);
        let bound = default_oracle_deg_bound(&code);
        assert_eq!(bound, 4);
        assert_eq!(
            brute_force_distance(&code, 6, DEFAULT_ORACLE_BUDGET).unwrap(),
            6
        );
        // repetition code, degree bound 0
        assert_eq!(
            brute_force_distance(&code_gf4(0), 0, DEFAULT_ORACLE_BUDGET).unwrap(),
            3
        );
        // budget refusal
        assert!(matches!(
            brute_force_distance(&code, 20, DEFAULT_ORACLE_BUDGET),
            Err(DistanceError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn oracle_example_3() {
        let code = code_gf4(2);
        assert_eq!(
            brute_force_distance(&code, 6, DEFAULT_ORACLE_BUDGET).unwrap(),
            9
        );
    }

    #[test]
    fn slope_bound_values() {
        assert_eq!(slope_lower_bound(&code_gf4(1), 4), 10);
        assert_eq!(slope_lower_bound(&code_gf4(2), 5), 11);
        let gf8 = code_gf8_n3_d2();
        assert_eq!(slope_lower_bound(&gf8, 3), 9);
        assert_eq!(slope_lower_bound(&gf8, 4), 10);
        let d = extended_row_distances(&gf8, 4).unwrap();
        assert_eq!(d[&3], 9);
        assert_eq!(d[&4], 10);
    }

    #[test]
    fn census_counts_constant_multiples() {
        for code in [code_gf4(1), code_gf4(2), code_gf8_n3_d2()] {
            let (hits, total) = minimum_weight_census(&code);
            assert_eq!(hits, code.spec().q() - 1);
            assert_eq!(total, code.spec().q() - 1);
        }
    }

    #[test]
    fn census_matches_enumerator_term() {
        let code = code_gf4(2);
        let series = weight_enumerator(&code, 3, DEFAULT_ENUMERATOR_BUDGET).unwrap();
        let (hits, _) = minimum_weight_census(&code);
        assert_eq!(series.term(3).unwrap()[&9], hits);
    }

    #[test]
    fn explicit_witness_weights() {
        // wt((sum z^i) G) = 2 + j(n-1) for delta = 1 over char-2 fields
        let f8 = FieldSpec::new(2, 3, None).unwrap();
        for n in [3usize, 4, 5] {
            let a = f8
                .find_element_of_order(n as u64, OrderMode::AtLeast)
                .unwrap();
            let code = build_code(&f8, n, 1, &a).unwrap();
            for j in 2..=8usize {
                let u = DensePoly::from_indices(&f8, vec![f8.one().index(); j - 1]);
                let wt: u64 = code
                    .generator()
                    .row(0)
                    .iter()
                    .map(|e| (&u * e).weight())
                    .sum();
                assert_eq!(wt, 2 + (j as u64) * (n as u64 - 1));
            }
        }
    }
}
