//! Exhaustive, isomorphism-free generation of connected simple cubic
//! graphs on up to 18 vertices, and the census-level maxima (μ, μ₁,
//! optimality reports) built on top of it.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::autgroup::{
    are_isomorphic, automorphism_group, canonical_cert, canonical_graph, isomorphism_between,
    m_of, pi_of,
};
use crate::candidates::{build_genus10_alternate, candidate};
use crate::graph::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("no cubic graph on an odd number of vertices ({0})")]
    OddVertexCount(usize),
    #[error("cubic graphs need at least 4 vertices, got {0}")]
    TooSmall(usize),
    #[error("no census available for genus {0}")]
    InfeasibleGenus(u64),
}

/// Known census sizes (connected simple cubic graphs per vertex count).
pub const CENSUS_COUNTS: [(usize, usize); 8] = [
    (4, 1),
    (6, 2),
    (8, 5),
    (10, 19),
    (12, 85),
    (14, 509),
    (16, 4060),
    (18, 41301),
];

/// Partner iteration order inside the search; both orders must produce the
/// same sorted census (dual-strategy cross-check).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    Ascending,
    Descending,
}

/// A work-splitting token: a partial edge assignment whose subtree one
/// worker owns. The union of leaves over any disjoint prefix cover equals
/// the full census.
#[derive(Debug, Clone)]
pub struct EnumerationCursor {
    pub vertex_count: usize,
    pub prefix: Vec<(u32, u32)>,
}

#[derive(Clone)]
struct State {
    n: usize,
    deg: Vec<u8>,
    adj: Vec<u32>, // bitmask rows
    edges: Vec<(u32, u32)>,
}

impl State {
    fn fresh(n: usize) -> State {
        State {
            n,
            deg: vec![0; n],
            adj: vec![0; n],
            edges: Vec::with_capacity(3 * n / 2),
        }
    }

    fn from_prefix(n: usize, prefix: &[(u32, u32)]) -> State {
        let mut s = State::fresh(n);
        for &(u, v) in prefix {
            s.add(u, v);
        }
        s
    }

    fn add(&mut self, u: u32, v: u32) {
        self.deg[u as usize] += 1;
        self.deg[v as usize] += 1;
        self.adj[u as usize] |= 1 << v;
        self.adj[v as usize] |= 1 << u;
        self.edges.push((u, v));
    }

    fn remove_last(&mut self) {
        let (u, v) = self.edges.pop().unwrap();
        self.deg[u as usize] -= 1;
        self.deg[v as usize] -= 1;
        self.adj[u as usize] &= !(1 << v);
        self.adj[v as usize] &= !(1 << u);
    }

    /// Smallest vertex of valence below three, if any.
    fn active(&self) -> Option<u32> {
        (0..self.n as u32).find(|&v| self.deg[v as usize] < 3)
    }
}

/// Visit every completion of the state. Construction rules (each labeled
/// graph corresponds to exactly one search path):
///   - always extend the smallest deficient vertex u;
///   - u's partners are added in increasing (resp. decreasing) label order;
///   - an isolated vertex may only be used if it is the smallest isolated
///     vertex (fresh labels are consumed consecutively);
///   - an isolated active vertex other than 0 means vertices before it form
///     a finished component: prune (connectivity).
fn complete<F: FnMut(&[(u32, u32)])>(state: &mut State, order: SearchOrder, emit: &mut F) {
    let u = match state.active() {
        None => {
            emit(&state.edges);
            return;
        }
        Some(u) => u,
    };
    if state.deg[u as usize] == 0 && u > 0 {
        return;
    }
    // partners already added to u while it was active must grow, so resume
    // after the largest current neighbor above u
    let floor = state.edges.iter().rev().find(|&&(a, _)| a == u).map(|&(_, b)| b);
    let lo = floor.map_or(u + 1, |b| b + 1);
    let first_isolated = (u + 1..state.n as u32).find(|&w| state.deg[w as usize] == 0);
    let candidates: Vec<u32> = (lo..state.n as u32)
        .filter(|&w| {
            state.deg[w as usize] < 3
                && state.adj[u as usize] & (1 << w) == 0
                && (state.deg[w as usize] > 0 || Some(w) == first_isolated)
        })
        .collect();
    // every isolated vertex above lo can eventually serve as a partner
    // (fresh labels unlock consecutively), so count them all for the
    // feasibility prune
    let potential = candidates.len()
        + (lo..state.n as u32)
            .filter(|&w| state.deg[w as usize] == 0 && Some(w) != first_isolated)
            .count();
    let needed = 3 - state.deg[u as usize] as usize;
    if potential < needed {
        return;
    }
    let iter: Box<dyn Iterator<Item = u32>> = match order {
        SearchOrder::Ascending => Box::new(candidates.iter().copied()),
        SearchOrder::Descending => Box::new(candidates.iter().rev().copied()),
    };
    for w in iter {
        state.add(u, w);
        complete(state, order, emit);
        state.remove_last();
    }
}

/// Split the search tree into prefix cursors of roughly the given depth.
pub fn split_cursors(v: usize, depth: usize) -> Vec<EnumerationCursor> {
    let mut out = Vec::new();
    let mut state = State::fresh(v);
    split_rec(&mut state, depth, &mut out);
    out
}

fn split_rec(state: &mut State, depth: usize, out: &mut Vec<EnumerationCursor>) {
    if state.edges.len() >= depth || state.active().is_none() {
        out.push(EnumerationCursor {
            vertex_count: state.n,
            prefix: state.edges.clone(),
        });
        return;
    }
    let u = state.active().unwrap();
    if state.deg[u as usize] == 0 && u > 0 {
        return;
    }
    let floor = state.edges.iter().rev().find(|&&(a, _)| a == u).map(|&(_, b)| b);
    let lo = floor.map_or(u + 1, |b| b + 1);
    let first_isolated = (u + 1..state.n as u32).find(|&w| state.deg[w as usize] == 0);
    for w in lo..state.n as u32 {
        if state.deg[w as usize] < 3
            && state.adj[u as usize] & (1 << w) == 0
            && (state.deg[w as usize] > 0 || Some(w) == first_isolated)
        {
            state.add(u, w);
            split_rec(state, depth, out);
            state.remove_last();
        }
    }
}

/// Cheap isomorphism-invariant bucket key: sorted per-vertex BFS distance
/// histograms plus the triangle count. Refinement alone cannot split
/// regular graphs, so distance profiles do the coarse screening; exactness
/// comes from the pairwise isomorphism test inside each bucket.
fn leaf_invariant(g: &Graph) -> u64 {
    use std::hash::{Hash, Hasher};
    let n = g.vertex_count();
    let mut profiles: Vec<Vec<u8>> = Vec::with_capacity(n);
    let mut dist = vec![u8::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n as u32 {
        dist.iter_mut().for_each(|d| *d = u8::MAX);
        dist[s as usize] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &w in g.neighbors(v) {
                if dist[w as usize] == u8::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push(w);
                }
            }
        }
        let mut hist = vec![0u8; n];
        for &d in &dist {
            hist[d as usize] += 1;
        }
        while hist.last() == Some(&0) {
            hist.pop();
        }
        profiles.push(hist);
    }
    profiles.sort_unstable();
    let triangles: usize = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            g.neighbors(u)
                .iter()
                .filter(|&&w| w != v && g.has_edge(w.min(v), w.max(v)))
                .count()
        })
        .sum();
    let mut hasher = std::collections::hash_map::DefaultHasher::new();
    profiles.hash(&mut hasher);
    triangles.hash(&mut hasher);
    hasher.finish()
}

type Buckets = HashMap<u64, Vec<Graph>>;

fn insert_class(buckets: &mut Buckets, g: Graph) {
    let key = leaf_invariant(&g);
    let reps = buckets.entry(key).or_default();
    if !reps.iter().any(|r| isomorphism_between(r, &g).is_some()) {
        reps.push(g);
    }
}

/// Run one cursor's subtree; returns one representative per isomorphism
/// class met in the subtree, bucketed by invariant.
pub fn run_cursor(cursor: &EnumerationCursor, order: SearchOrder) -> HashMap<u64, Vec<Graph>> {
    let mut state = State::from_prefix(cursor.vertex_count, &cursor.prefix);
    let mut buckets: Buckets = HashMap::new();
    complete(&mut state, order, &mut |edges| {
        insert_class(&mut buckets, Graph::new(cursor.vertex_count, edges).unwrap());
    });
    buckets
}

fn enumerate_with(v: usize, order: SearchOrder, split_depth: usize) -> Vec<Graph> {
    let cursors = split_cursors(v, split_depth);
    let merged: Buckets = cursors
        .par_iter()
        .map(|c| run_cursor(c, order))
        .reduce(HashMap::new, |mut a, b| {
            for (_, reps) in b {
                for g in reps {
                    insert_class(&mut a, g);
                }
            }
            a
        });
    // canonicalize only the class representatives (census scale)
    let mut entries: Vec<(String, Graph)> = merged
        .into_values()
        .flatten()
        .par_bridge()
        .map(|g| (canonical_cert(&g), canonical_graph(&g)))
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    entries.into_iter().map(|(_, g)| g).collect()
}

/// All connected simple cubic graphs on v vertices, one canonical
/// representative per isomorphism class, sorted by canonical certificate.
pub fn enumerate_cubic(v: usize) -> Result<Vec<Graph>, EnumerateError> {
    if v % 2 == 1 {
        return Err(EnumerateError::OddVertexCount(v));
    }
    if v < 4 {
        return Err(EnumerateError::TooSmall(v));
    }
    Ok(enumerate_with(v, SearchOrder::Ascending, 6))
}

/// Independent re-run with reversed partner order and a different work
/// split; must equal `enumerate_cubic` output exactly.
pub fn enumerate_cubic_dual(v: usize) -> Result<Vec<Graph>, EnumerateError> {
    if v % 2 == 1 {
        return Err(EnumerateError::OddVertexCount(v));
    }
    if v < 4 {
        return Err(EnumerateError::TooSmall(v));
    }
    Ok(enumerate_with(v, SearchOrder::Descending, 4))
}

// ---------------------------------------------------------------------------
// naive oracles
// ---------------------------------------------------------------------------

/// Naive oracle: enumerate every labeled graph with degree sequence 3^v by
/// choosing each vertex's higher-labeled neighbors, then count connected
/// ones and dedup by canonical certificate. Independent of the ordered
/// edge-completion search.
pub fn naive_census(v: usize) -> (u64, usize) {
    assert!(v % 2 == 0 && (4..=10).contains(&v));
    let mut labeled = 0u64;
    let mut classes: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut state = State::fresh(v);
    naive_rec(&mut state, 0, &mut |edges| {
        let g = Graph::new(v, edges).unwrap();
        if g.is_connected() {
            labeled += 1;
            if v <= 8 {
                classes.insert(canonical_cert(&g));
            }
        }
    });
    (labeled, classes.len())
}

fn naive_rec<F: FnMut(&[(u32, u32)])>(state: &mut State, v: u32, emit: &mut F) {
    if v as usize == state.n {
        emit(&state.edges);
        return;
    }
    let need = 3 - state.deg[v as usize] as usize;
    let pool: Vec<u32> = (v + 1..state.n as u32)
        .filter(|&w| state.deg[w as usize] < 3)
        .collect();
    choose_rec(state, v, &pool, 0, need, emit);
}

fn choose_rec<F: FnMut(&[(u32, u32)])>(
    state: &mut State,
    v: u32,
    pool: &[u32],
    from: usize,
    need: usize,
    emit: &mut F,
) {
    if need == 0 {
        naive_rec(state, v + 1, emit);
        return;
    }
    if pool.len() - from < need {
        return;
    }
    for i in from..pool.len() {
        let w = pool[i];
        if state.deg[w as usize] < 3 {
            state.add(v, w);
            choose_rec(state, v, pool, i + 1, need - 1, emit);
            state.remove_last();
        }
    }
}

/// Count of labeled connected cubic graphs predicted from the census via
/// orbit counting: sum of v! / |Aut G| over isomorphism classes.
pub fn labeled_count_from_census(census: &[Graph]) -> BigUint {
    let v = census[0].vertex_count() as u64;
    let fact: BigUint = (1..=v).map(BigUint::from).product();
    census
        .iter()
        .map(|g| fact.clone() / automorphism_group(g).order)
        .sum()
}

// ---------------------------------------------------------------------------
// census maxima
// ---------------------------------------------------------------------------

fn census_for_genus(g: u64) -> Result<Vec<Graph>, EnumerateError> {
    if !(3..=10).contains(&g) {
        return Err(EnumerateError::InfeasibleGenus(g));
    }
    enumerate_cubic(2 * (g as usize - 1))
}

/// Exact maximum of |Aut| over the genus-g census, with all attaining
/// isomorphism classes.
pub fn mu_of(g: u64) -> Result<(BigUint, Vec<Graph>), EnumerateError> {
    let census = census_for_genus(g)?;
    let orders: Vec<BigUint> = census
        .par_iter()
        .map(|h| automorphism_group(h).order)
        .collect();
    let max = orders.iter().max().unwrap().clone();
    let witnesses = census
        .into_iter()
        .zip(&orders)
        .filter(|(_, o)| **o == max)
        .map(|(h, _)| h)
        .collect();
    Ok((max, witnesses))
}

/// Exact maximum of π(G) = max_e |Aut′_e(G)| over the genus-g census.
pub fn mu1_of(g: u64) -> Result<(BigUint, Vec<Graph>), EnumerateError> {
    let census = census_for_genus(g)?;
    let pis: Vec<BigUint> = census.par_iter().map(pi_of).collect();
    let max = pis.iter().max().unwrap().clone();
    let witnesses = census
        .into_iter()
        .zip(&pis)
        .filter(|(_, p)| **p == max)
        .map(|(h, _)| h)
        .collect();
    Ok((max, witnesses))
}

#[derive(Debug, Clone)]
pub struct OptimalityReport {
    pub genus: u64,
    pub census_size: usize,
    pub max_aut: BigUint,
    pub winners: Vec<Graph>,
    pub winner_m: Vec<usize>,
    pub candidate_is_winner: bool,
    pub alternate_is_winner: Option<bool>,
}

/// Which graphs attain max |Aut| at genus g, compared against the
/// candidate construction (and, for g=10, the pseudocycle alternate).
pub fn optimality_census(g: u64) -> Result<OptimalityReport, EnumerateError> {
    if !(g == 9 || g == 10) {
        return Err(EnumerateError::InfeasibleGenus(g));
    }
    let census = census_for_genus(g)?;
    let census_size = census.len();
    let orders: Vec<BigUint> = census
        .par_iter()
        .map(|h| automorphism_group(h).order)
        .collect();
    let max_aut = orders.iter().max().unwrap().clone();
    let winners: Vec<Graph> = census
        .into_iter()
        .zip(&orders)
        .filter(|(_, o)| **o == max_aut)
        .map(|(h, _)| h)
        .collect();
    let winner_m: Vec<usize> = winners.iter().map(m_of).collect();
    let cand = candidate(g).unwrap().0;
    let candidate_is_winner = winners.iter().any(|w| are_isomorphic(w, &cand));
    let alternate_is_winner = (g == 10).then(|| {
        let alt = build_genus10_alternate();
        winners.iter().any(|w| are_isomorphic(w, &alt))
    });
    Ok(OptimalityReport {
        genus: g,
        census_size,
        max_aut,
        winners,
        winner_m,
        candidate_is_winner,
        alternate_is_winner,
    })
}


/// Leaf count of one cursor's subtree without canonicalization (profiling
/// and prefix-cover sanity checks).
pub fn run_cursor_count(cursor: &EnumerationCursor) -> u64 {
    let mut state = State::from_prefix(cursor.vertex_count, &cursor.prefix);
    let mut n = 0u64;
    complete(&mut state, SearchOrder::Ascending, &mut |_| n += 1);
    n
}
