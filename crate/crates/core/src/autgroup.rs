//! Exact automorphism groups of simple graphs, canonical forms, and the
//! edge-orbit statistics built on them: M(G), edge transitivity, the
//! edge-preserving subgroup order, and minimal-orbit classification.
//!
//! The engine is partition-refinement backtracking. Group order is computed
//! along a stabilizer chain: at each level we take the first smallest
//! non-singleton cell of the refined partition, and for each vertex of the
//! cell decide by explicit search whether some automorphism fixing the
//! already-chosen base maps the base point there. The product of the orbit
//! sizes is the exact group order, and the harvested permutations form a
//! strong generating set (every orbit point is reachable from the base
//! point through stored generators of its level).

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub degree: usize,
    /// strong generating set; each entry maps vertex v to generators[i][v]
    pub generators: Vec<Vec<u32>>,
    pub order: BigUint,
    pub vertex_orbits: Vec<Vec<u32>>,
    pub edge_orbits: Vec<Vec<(u32, u32)>>,
}

/// Canonically refine `colors` to the coarsest stable partition: cells are
/// repeatedly split by the multiset of neighbor colors, and new color ids
/// are assigned in sorted key order, so the result is isomorphism-invariant.
fn refine_colors(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    if (0..n as u32).all(|v| g.degree(v) <= 3) {
        refine_colors_low_degree(g, colors);
        return;
    }
    loop {
        let mut current: Vec<u32> = colors.to_vec();
        current.sort_unstable();
        current.dedup();
        let old_count = current.len();

        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g
                    .neighbors(v as u32)
                    .iter()
                    .map(|&w| colors[w as usize])
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut uniq = keys.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() == old_count {
            return;
        }
        for v in 0..n {
            colors[v] = uniq.binary_search(&keys[v]).unwrap() as u32;
        }
    }
}

/// Allocation-light refinement for graphs of maximum degree three: the
/// split key (color, sorted neighbor colors padded with sentinels) packs
/// into one u128 per vertex. Same partition rule as the general path; the
/// id assignment order may differ, but it is applied consistently to every
/// low-degree graph, so invariance across isomorphic graphs is preserved.
fn refine_colors_low_degree(g: &Graph, colors: &mut [u32]) {
    let n = colors.len();
    let mut keys: Vec<u128> = vec![0; n];
    let mut uniq: Vec<u128> = Vec::with_capacity(n);
    let mut count = {
        let mut c: Vec<u32> = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        for (v, key) in keys.iter_mut().enumerate() {
            let mut nb = [u32::MAX; 3];
            for (i, &w) in g.neighbors(v as u32).iter().enumerate() {
                nb[i] = colors[w as usize];
            }
            nb.sort_unstable();
            *key = (colors[v] as u128) << 96
                | (nb[0] as u128) << 64
                | (nb[1] as u128) << 32
                | nb[2] as u128;
        }
        uniq.clear();
        uniq.extend_from_slice(&keys);
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() == count {
            return;
        }
        count = uniq.len();
        for v in 0..n {
            colors[v] = uniq.binary_search(&keys[v]).unwrap() as u32;
        }
    }
}

/// Cells of a coloring, indexed by dense rank of the color value.
fn cells_of(colors: &[u32]) -> Vec<Vec<u32>> {
    let mut ids: Vec<u32> = colors.to_vec();
    ids.sort_unstable();
    ids.dedup();
    let mut cells = vec![Vec::new(); ids.len()];
    for (v, &c) in colors.iter().enumerate() {
        let idx = ids.binary_search(&c).unwrap();
        cells[idx].push(v as u32);
    }
    cells
}

fn first_smallest_nonsingleton(cells: &[Vec<u32>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, c) in cells.iter().enumerate() {
        if c.len() > 1 && best.map_or(true, |b| c.len() < cells[b].len()) {
            best = Some(i);
        }
    }
    best
}

/// Find any automorphism of `g` sending the `src` coloring onto the `tgt`
/// coloring (vertex v maps to a vertex of the same color), or None.
fn search_iso(g: &Graph, mut src: Vec<u32>, mut tgt: Vec<u32>) -> Option<Vec<u32>> {
    refine_colors(g, &mut src);
    refine_colors(g, &mut tgt);
    let sc = cells_of(&src);
    let tc = cells_of(&tgt);
    if sc.len() != tc.len() || sc.iter().zip(&tc).any(|(a, b)| a.len() != b.len()) {
        return None;
    }
    match first_smallest_nonsingleton(&sc) {
        None => {
            // discrete on both sides: the color-matching map is the only
            // candidate; accept iff it preserves adjacency
            let n = g.vertex_count();
            let mut perm = vec![0u32; n];
            for (s_cell, t_cell) in sc.iter().zip(&tc) {
                perm[s_cell[0] as usize] = t_cell[0];
            }
            let ok = g
                .edges()
                .iter()
                .all(|&(u, v)| g.has_edge(perm[u as usize].min(perm[v as usize]), perm[u as usize].max(perm[v as usize])));
            ok.then_some(perm)
        }
        Some(cell) => {
            let u = sc[cell][0];
            let fresh = src.iter().chain(tgt.iter()).max().unwrap() + 1;
            for &v in &tc[cell] {
                let mut s2 = src.clone();
                let mut t2 = tgt.clone();
                s2[u as usize] = fresh;
                t2[v as usize] = fresh;
                if let Some(p) = search_iso(g, s2, t2) {
                    return Some(p);
                }
            }
            None
        }
    }
}

fn close_orbit(orbit: &mut HashSet<u32>, gens: &[&Vec<u32>]) {
    let mut stack: Vec<u32> = orbit.iter().copied().collect();
    while let Some(v) = stack.pop() {
        for p in gens {
            let w = p[v as usize];
            if orbit.insert(w) {
                stack.push(w);
            }
        }
    }
}

/// Automorphism group respecting an initial coloring (automorphisms must
/// preserve each color class).
pub fn automorphism_group_colored(g: &Graph, base: &[u32]) -> PermutationGroup {
    let n = g.vertex_count();
    assert_eq!(base.len(), n);
    let mut fixed: Vec<u32> = base.to_vec();
    let mut order = BigUint::one();
    let mut gens: Vec<Vec<u32>> = Vec::new();

    loop {
        let mut c = fixed.clone();
        refine_colors(g, &mut c);
        let cells = cells_of(&c);
        let Some(cell) = first_smallest_nonsingleton(&cells) else {
            break;
        };
        let b = cells[cell][0];
        let level_start = gens.len();
        let mut orbit: HashSet<u32> = HashSet::from([b]);
        for &v in &cells[cell][1..] {
            if orbit.contains(&v) {
                continue;
            }
            let fresh = fixed.iter().max().unwrap() + 1;
            let mut s = fixed.clone();
            let mut t = fixed.clone();
            s[b as usize] = fresh;
            t[v as usize] = fresh;
            if let Some(p) = search_iso(g, s, t) {
                gens.push(p);
                let level: Vec<&Vec<u32>> = gens[level_start..].iter().collect();
                close_orbit(&mut orbit, &level);
            }
        }
        order *= BigUint::from(orbit.len());
        let fresh = fixed.iter().max().unwrap() + 1;
        fixed[b as usize] = fresh;
    }

    let vertex_orbits = orbits_on_vertices(n, &gens);
    let edge_orbits = orbits_on_edges(g, &gens);
    PermutationGroup {
        degree: n,
        generators: gens,
        order,
        vertex_orbits,
        edge_orbits,
    }
}

pub fn automorphism_group(g: &Graph) -> PermutationGroup {
    automorphism_group_colored(g, &vec![0; g.vertex_count()])
}

fn orbits_on_vertices(n: usize, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for v in 0..n as u32 {
        if seen[v as usize] {
            continue;
        }
        let mut orbit = HashSet::from([v]);
        let refs: Vec<&Vec<u32>> = gens.iter().collect();
        close_orbit(&mut orbit, &refs);
        let mut members: Vec<u32> = orbit.into_iter().collect();
        members.sort_unstable();
        for &m in &members {
            seen[m as usize] = true;
        }
        out.push(members);
    }
    out
}

fn orbits_on_edges(g: &Graph, gens: &[Vec<u32>]) -> Vec<Vec<(u32, u32)>> {
    let index: HashMap<(u32, u32), usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let m = g.edges().len();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (u, v) = g.edges()[i];
            for p in gens {
                let (a, b) = (p[u as usize], p[v as usize]);
                let j = index[&(a.min(b), a.max(b))];
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                    stack.push(j);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit.into_iter().map(|i| g.edges()[i]).collect());
    }
    out
}

// ---------------------------------------------------------------------------
// canonical form / isomorphism
// ---------------------------------------------------------------------------

/// Canonically labeled copy of `g`: the relabeling whose upper-triangle
/// adjacency bitmap is lexicographically minimal among all refinements
/// reached by the backtracking search.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.vertex_count();
    if n == 0 {
        return g.clone();
    }
    let mut best: Option<Vec<bool>> = None;
    canon_rec(g, vec![0; n], &mut best);
    let bits = best.expect("at least one labeling");
    let mut edges = Vec::with_capacity(g.edges().len());
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u as u32, v as u32));
            }
            idx += 1;
        }
    }
    Graph::new(n, &edges).expect("canonical relabeling stays simple")
}

fn canon_rec(g: &Graph, mut colors: Vec<u32>, best: &mut Option<Vec<bool>>) {
    refine_colors(g, &mut colors);
    let cells = cells_of(&colors);
    match first_smallest_nonsingleton(&cells) {
        None => {
            let mut perm = vec![0u32; colors.len()];
            for (rank, cell) in cells.iter().enumerate() {
                perm[cell[0] as usize] = rank as u32;
            }
            let bits = g.relabel(&perm).upper_triangle_bits();
            if best.as_ref().map_or(true, |b| bits < *b) {
                *best = Some(bits);
            }
        }
        Some(cell) => {
            let fresh = colors.iter().max().unwrap() + 1;
            for &v in &cells[cell] {
                let mut c2 = colors.clone();
                c2[v as usize] = fresh;
                canon_rec(g, c2, best);
            }
        }
    }
}

/// Compact certificate: equal iff the graphs are isomorphic.
pub fn canonical_cert(g: &Graph) -> String {
    crate::graph::emit_graph6(&canonical_graph(g)).expect("certificate fits graph6")
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    isomorphism_between(a, b).is_some()
}

/// An explicit isomorphism a -> b, if one exists. Same
/// individualization-refinement search as the automorphism engine, run on
/// a pair of graphs; much cheaper than comparing canonical forms.
pub fn isomorphism_between(a: &Graph, b: &Graph) -> Option<Vec<u32>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let n = a.vertex_count();
    iso_rec(a, b, vec![0; n], vec![0; n])
}

fn iso_rec(a: &Graph, b: &Graph, mut ca: Vec<u32>, mut cb: Vec<u32>) -> Option<Vec<u32>> {
    refine_colors(a, &mut ca);
    refine_colors(b, &mut cb);
    // refined color ids are isomorphism-invariant, so the sorted color
    // multisets must agree for a match
    let mut ha = ca.clone();
    let mut hb = cb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb {
        return None;
    }
    let cells_a = cells_of(&ca);
    let cells_b = cells_of(&cb);
    match first_smallest_nonsingleton(&cells_a) {
        None => {
            let n = a.vertex_count();
            let mut perm = vec![0u32; n];
            for (sa, sb) in cells_a.iter().zip(&cells_b) {
                perm[sa[0] as usize] = sb[0];
            }
            let ok = a.edges().iter().all(|&(u, v)| {
                let (x, y) = (perm[u as usize], perm[v as usize]);
                b.has_edge(x.min(y), x.max(y))
            });
            ok.then_some(perm)
        }
        Some(cell) => {
            let u = cells_a[cell][0];
            let fresh = ca.iter().chain(cb.iter()).max().unwrap() + 1;
            for &v in &cells_b[cell] {
                let mut ca2 = ca.clone();
                let mut cb2 = cb.clone();
                ca2[u as usize] = fresh;
                cb2[v as usize] = fresh;
                if let Some(p) = iso_rec(a, b, ca2, cb2) {
                    return Some(p);
                }
            }
            None
        }
    }
}

// ---------------------------------------------------------------------------
// edge statistics
// ---------------------------------------------------------------------------

pub fn edge_orbits(g: &Graph) -> Vec<Vec<(u32, u32)>> {
    automorphism_group(g).edge_orbits
}

/// Number of edges in a minimal orbit of an edge.
pub fn m_of(g: &Graph) -> usize {
    edge_orbits(g)
        .iter()
        .map(|o| o.len())
        .min()
        .expect("graph has at least one edge")
}

pub fn is_edge_transitive(g: &Graph) -> bool {
    edge_orbits(g).len() == 1
}

/// Upper bound 384(g-1) on |Aut| of an edge-transitive cubic graph.
pub fn edge_transitive_bound(genus: u64) -> u64 {
    384 * (genus - 1)
}

/// Order of the subgroup of Aut(G) preserving the unordered pair
/// {endpoints of e}.
pub fn edge_preserving_order(g: &Graph, e: (u32, u32)) -> BigUint {
    let mut colors = vec![0u32; g.vertex_count()];
    colors[e.0 as usize] = 1;
    colors[e.1 as usize] = 1;
    automorphism_group_colored(g, &colors).order
}

/// max over edges e of |Aut'_e|. Stabilizers of edges in one orbit are
/// conjugate, so one representative per orbit suffices.
pub fn pi_of(g: &Graph) -> BigUint {
    edge_orbits(g)
        .iter()
        .map(|orbit| edge_preserving_order(g, orbit[0]))
        .max()
        .expect("graph has at least one edge")
}

/// |Aut G| divides 3n·2^n for a connected cubic graph on n vertices.
pub fn group_order_divides_wormald(g: &Graph) -> bool {
    let n = g.vertex_count();
    let bound = BigUint::from(3u32 * n as u32) << n;
    let order = automorphism_group(g).order;
    bound.is_multiple_of(&order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitKind {
    WholeGraph,
    DisjointStars,
    DisjointEdges,
    DisjointCycles,
}

#[derive(Debug, Clone)]
pub struct OrbitClassification {
    pub kind: OrbitKind,
    pub orbit: Vec<(u32, u32)>,
    pub star_count: Option<usize>,
    pub edge_count: Option<usize>,
    pub cycle_lengths: Option<Vec<usize>>,
}

/// Classify a minimal edge orbit of a connected cubic graph into the four
/// possible shapes: the whole graph, disjoint stars, disjoint
/// edges, or disjoint cycles (the latter pairwise at distance at least two).
pub fn classify_minimal_orbit(g: &Graph) -> OrbitClassification {
    assert!(g.is_cubic() && g.is_connected());
    let orbits = edge_orbits(g);
    let orbit = orbits
        .iter()
        .min_by_key(|o| (o.len(), o[0]))
        .expect("graph has edges")
        .clone();
    if orbit.len() == g.edge_count() {
        return OrbitClassification {
            kind: OrbitKind::WholeGraph,
            orbit,
            star_count: None,
            edge_count: None,
            cycle_lengths: None,
        };
    }

    // components of the subgraph spanned by the orbit
    let mut deg: HashMap<u32, usize> = HashMap::new();
    let mut adj: HashMap<u32, Vec<u32>> = HashMap::new();
    for &(u, v) in &orbit {
        *deg.entry(u).or_insert(0) += 1;
        *deg.entry(v).or_insert(0) += 1;
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut comp_of: HashMap<u32, usize> = HashMap::new();
    let mut comps: Vec<Vec<u32>> = Vec::new();
    for &v in adj.keys() {
        if comp_of.contains_key(&v) {
            continue;
        }
        let id = comps.len();
        let mut members = vec![v];
        comp_of.insert(v, id);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &y in &adj[&x] {
                if comp_of.insert(y, id).is_none() {
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        comps.push(members);
    }
    let comp_edges = |id: usize| -> usize {
        orbit.iter().filter(|&&(u, _)| comp_of[&u] == id).count()
    };

    let all_single_edges = comps
        .iter()
        .enumerate()
        .all(|(i, c)| c.len() == 2 && comp_edges(i) == 1);
    if all_single_edges {
        return OrbitClassification {
            kind: OrbitKind::DisjointEdges,
            edge_count: Some(comps.len()),
            orbit,
            star_count: None,
            cycle_lengths: None,
        };
    }

    let is_star = |i: usize, c: &[u32]| -> bool {
        let centers = c.iter().filter(|&&v| deg[&v] >= 2).count();
        centers == 1 && comp_edges(i) == c.len() - 1
    };
    if comps.iter().enumerate().all(|(i, c)| is_star(i, c)) {
        return OrbitClassification {
            kind: OrbitKind::DisjointStars,
            star_count: Some(comps.len()),
            orbit,
            edge_count: None,
            cycle_lengths: None,
        };
    }

    let is_cycle = |i: usize, c: &[u32]| -> bool {
        c.iter().all(|&v| deg[&v] == 2) && comp_edges(i) == c.len()
    };
    if comps.iter().enumerate().all(|(i, c)| is_cycle(i, c)) {
        // two cycles must be at distance >= 2: no edge of G joins them
        for &(u, v) in g.edges() {
            if let (Some(&a), Some(&b)) = (comp_of.get(&u), comp_of.get(&v)) {
                if a != b {
                    panic!("minimal-orbit cycles at distance one: ({u}, {v})");
                }
            }
        }
        let lengths: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        return OrbitClassification {
            kind: OrbitKind::DisjointCycles,
            cycle_lengths: Some(lengths),
            orbit,
            star_count: None,
            edge_count: None,
        };
    }

    unreachable!("minimal edge orbit escapes the four-shape classification");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, Graph};
    use num_traits::ToPrimitive;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn order_u64(g: &Graph) -> u64 {
        automorphism_group(g).order.to_u64().unwrap()
    }

    /// brute force over all vertex permutations; only for tiny graphs
    fn naive_order(g: &Graph) -> u64 {
        let n = g.vertex_count();
        assert!(n <= 8);
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut count = 0u64;
        permute(&mut perm, 0, &mut |p| {
            let ok = g
                .edges()
                .iter()
                .all(|&(u, v)| {
                    let (a, b) = (p[u as usize], p[v as usize]);
                    g.has_edge(a.min(b), a.max(b))
                });
            if ok {
                count += 1;
            }
        });
        count
    }

    fn permute(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn known_group_orders() {
        assert_eq!(order_u64(&graph::tetrahedron()), 24);
        assert_eq!(order_u64(&graph::k33()), 72);
        assert_eq!(order_u64(&graph::prism()), 12);
        assert_eq!(order_u64(&graph::cube()), 48);
        assert_eq!(order_u64(&graph::petersen()), 120);
        assert_eq!(order_u64(&graph::heawood()), 336);
    }

    #[test]
    fn matches_naive_oracle() {
        let samples = [
            graph::tetrahedron(),
            graph::cycle(5),
            graph::cycle(6),
            graph::complete(5),
            graph::complete_bipartite(2, 3),
            graph::diamond(),
            graph::cube(),
            graph::tetrahedron().pinch(0, 1).unwrap(),
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::new(7, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]).unwrap(),
        ];
        for g in &samples {
            assert_eq!(order_u64(g), naive_order(g));
        }
    }

    #[test]
    fn order_is_relabeling_invariant() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for g in [graph::petersen(), graph::cube(), graph::heawood()] {
            let base = automorphism_group(&g).order;
            for _ in 0..20 {
                let mut perm: Vec<u32> = (0..g.vertex_count() as u32).collect();
                perm.shuffle(&mut rng);
                let h = g.relabel(&perm);
                assert_eq!(automorphism_group(&h).order, base);
                assert!(are_isomorphic(&g, &h));
            }
        }
    }

    #[test]
    fn generators_are_automorphisms() {
        for g in [graph::petersen(), graph::prism(), graph::k33()] {
            let grp = automorphism_group(&g);
            for p in &grp.generators {
                for &(u, v) in g.edges() {
                    let (a, b) = (p[u as usize], p[v as usize]);
                    assert!(g.has_edge(a.min(b), a.max(b)));
                }
            }
            let total: usize = grp.edge_orbits.iter().map(|o| o.len()).sum();
            assert_eq!(total, g.edge_count());
            for o in &grp.edge_orbits {
                assert!(grp.order.is_multiple_of(&BigUint::from(o.len())));
            }
        }
    }

    #[test]
    fn orbit_stabilizer_identity_on_edges() {
        for g in [graph::petersen(), graph::prism(), graph::cube(), graph::heawood()] {
            let grp = automorphism_group(&g);
            for orbit in &grp.edge_orbits {
                let e = orbit[0];
                let stab = edge_preserving_order(&g, e);
                assert_eq!(grp.order, stab * BigUint::from(orbit.len()));
            }
        }
    }

    #[test]
    fn edge_transitivity_and_m() {
        assert!(is_edge_transitive(&graph::tetrahedron()));
        assert_eq!(m_of(&graph::tetrahedron()), 6);
        assert!(is_edge_transitive(&graph::petersen()));
        assert_eq!(m_of(&graph::petersen()), 15);
        assert!(is_edge_transitive(&graph::heawood()));
        // prism: triangle edges vs matching edges
        assert!(!is_edge_transitive(&graph::prism()));
        assert_eq!(m_of(&graph::prism()), 3);
        // edge-transitive bound from the table: Heawood has genus 8
        assert_eq!(order_u64(&graph::heawood()), 48 * 7);
        assert!(48 * 7 <= edge_transitive_bound(8));
    }

    #[test]
    fn classify_minimal_orbits() {
        let k4 = classify_minimal_orbit(&graph::tetrahedron());
        assert_eq!(k4.kind, OrbitKind::WholeGraph);
        let prism = classify_minimal_orbit(&graph::prism());
        assert_eq!(prism.kind, OrbitKind::DisjointEdges);
        assert_eq!(prism.edge_count, Some(3));
        // cycles case: outer hexagon over two inner triangles; all three
        // edge orbits have size 6, and the hexagon orbit sorts first
        let c = classify_minimal_orbit(&hexagon_over_triangles());
        assert_eq!(c.kind, OrbitKind::DisjointCycles);
        assert_eq!(c.cycle_lengths, Some(vec![6]));
        // stars case: three pinched tetrahedra merged onto the leaves of a
        // 3-star; the star edges form the minimal orbit
        let s = classify_minimal_orbit(&star_of_three());
        assert_eq!(s.kind, OrbitKind::DisjointStars);
        assert_eq!(s.star_count, Some(1));
    }

    fn hexagon_over_triangles() -> Graph {
        let mut edges = Vec::new();
        for i in 0u32..6 {
            edges.push((i, (i + 1) % 6));
            edges.push((i, i + 6));
        }
        edges.extend([(6, 8), (8, 10), (6, 10), (7, 9), (9, 11), (7, 11)]);
        Graph::new(12, &edges).unwrap()
    }

    fn star_of_three() -> Graph {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let pinched = graph::tetrahedron().pinch(0, 1).unwrap();
        let mut g = star;
        for leaf in 1..=3 {
            g = crate::graph::attach_at_root(&g, leaf, &pinched, crate::graph::Root::Vertex(4))
                .unwrap();
        }
        assert!(g.is_cubic());
        g
    }

    #[test]
    fn wormald_divisibility() {
        for g in [
            graph::tetrahedron(),
            graph::k33(),
            graph::prism(),
            graph::cube(),
            graph::petersen(),
            graph::heawood(),
        ] {
            assert!(group_order_divides_wormald(&g));
        }
    }

    #[test]
    fn canonical_form_distinguishes() {
        assert!(!are_isomorphic(&graph::k33(), &graph::prism()));
        assert!(are_isomorphic(&graph::petersen(), &petersen_relabeled()));
        let cg = canonical_graph(&graph::petersen());
        assert_eq!(canonical_cert(&cg), canonical_cert(&graph::petersen()));
    }

    fn petersen_relabeled() -> Graph {
        let perm: Vec<u32> = vec![3, 7, 1, 9, 0, 4, 8, 2, 6, 5];
        graph::petersen().relabel(&perm)
    }

    #[test]
    fn pseudocycle_rotation_is_automorphism() {
        let mut edges: Vec<(u32, u32)> = graph::k33().edges().to_vec();
        edges.retain(|&e| e != (0, 3));
        let core = Graph::new(6, &edges).unwrap();
        let g = crate::graph::pseudocycle(&core, 0, 3, 3).unwrap();
        let rot: Vec<u32> = (0..18).map(|v| (v + 6) % 18).collect();
        for &(u, v) in g.edges() {
            let (a, b) = (rot[u as usize], rot[v as usize]);
            assert!(g.has_edge(a.min(b), a.max(b)));
        }
        assert_eq!(order_u64(&g), 384);
    }

    #[test]
    fn edge_stabilizer_examples() {
        // K4: |Aut| = 24, 6 edges in one orbit, so |Aut'_e| = 4
        let e = graph::tetrahedron().edges()[0];
        assert_eq!(
            edge_preserving_order(&graph::tetrahedron(), e),
            BigUint::from(4u32)
        );
        assert_eq!(pi_of(&graph::tetrahedron()), BigUint::from(4u32));
        // Petersen: 120 / 15 = 8
        assert_eq!(pi_of(&graph::petersen()), BigUint::from(8u32));
    }
}
