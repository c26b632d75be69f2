//! Immutable simple-graph representation and the structural operations the
//! rest of the crate builds on: genus, pinching, stabilization, rooted
//! attachment, pseudocycles, and graph6/DOT I/O.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0}, {0}) not allowed")]
    LoopEdge(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    VertexOutOfRange(u32, usize),
    #[error("edge ({0}, {1}) not in graph")]
    EdgeNotInGraph(u32, u32),
    #[error("vertex {0} has valence {1} < 2")]
    LowValence(u32, usize),
    #[error("attachment would force valence above three at vertex {0}")]
    DegreeOverflow(u32),
    #[error("pseudocycle core must be cubic except two valence-2 vertices: {0}")]
    BadPseudocycleCore(String),
    #[error("pseudocycle length must be at least 3, got {0}")]
    PseudocycleTooShort(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("vertex count {0} too large for graph6 encoding")]
    TooLarge(usize),
}

/// Immutable undirected simple graph on vertices `0..vertex_count`.
/// Edges are stored sorted with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
        let mut norm: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            if a as usize >= n {
                return Err(GraphError::VertexOutOfRange(a, n));
            }
            if b as usize >= n {
                return Err(GraphError::VertexOutOfRange(b, n));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        for w in norm.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: norm, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Arithmetic genus e - v + 1 (defined for disconnected graphs too).
    pub fn genus(&self) -> i64 {
        self.edges.len() as i64 - self.n as i64 + 1
    }

    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|nbrs| nbrs.len() == 3)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// The type admits no loops or multi-edges, so this is always true; it
    /// exists so call sites can state the standing hypothesis explicitly.
    pub fn is_simple_by_construction(&self) -> bool {
        true
    }

    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for start in 0..self.n as u32 {
            if comp[start as usize] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start as usize] = id;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Subdivide edge (u, v) once: a new valence-2 vertex replaces the edge
    /// with a length-2 path. Genus is unchanged.
    pub fn pinch(&self, u: u32, v: u32) -> Result<Graph, GraphError> {
        let (a, b) = (u.min(v), u.max(v));
        if !self.has_edge(a, b) {
            return Err(GraphError::EdgeNotInGraph(u, v));
        }
        let w = self.n as u32;
        let mut edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (a, b))
            .collect();
        edges.push((a, w));
        edges.push((b, w));
        Graph::new(self.n + 1, &edges)
    }

    /// Relabel with `perm[v] = new label of v`. `perm` must be a permutation
    /// of `0..n`.
    pub fn relabel(&self, perm: &[u32]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        Graph::new(self.n, &edges).expect("relabeling preserves simplicity")
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n as u32;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::new(self.n + other.n, &edges).expect("offset union stays simple")
    }

    /// Adjacency bitmap of the upper triangle in column order; the graph6
    /// payload and the canonical-form certificate both use it.
    pub fn upper_triangle_bits(&self) -> Vec<bool> {
        let mut bits = vec![false; self.n * (self.n.saturating_sub(1)) / 2];
        let idx = |u: usize, v: usize| v * (v - 1) / 2 + u; // u < v
        for &(u, v) in &self.edges {
            bits[idx(u as usize, v as usize)] = true;
        }
        bits
    }
}

/// Attachment point on an appendage: a vertex, or an edge that is pinched
/// first (the pinch vertex becomes the point of attachment).
#[derive(Debug, Clone, Copy)]
pub enum Root {
    Vertex(u32),
    Edge(u32, u32),
}

/// Join `appendage` to `core` at `core_vertex` following the attachment
/// convention: identify the two vertices when the merged valence stays at
/// most three, otherwise insert a connecting edge; reject anything that
/// would force valence above three.
pub fn attach_at_root(
    core: &Graph,
    core_vertex: u32,
    appendage: &Graph,
    appendage_root: Root,
) -> Result<Graph, GraphError> {
    let (appendage, root) = match appendage_root {
        Root::Vertex(v) => (appendage.clone(), v),
        Root::Edge(u, v) => {
            let pinched = appendage.pinch(u, v)?;
            let root = pinched.vertex_count() as u32 - 1;
            (pinched, root)
        }
    };
    let dc = core.degree(core_vertex);
    let da = appendage.degree(root);
    if dc > 2 {
        return Err(GraphError::DegreeOverflow(core_vertex));
    }
    let off = core.vertex_count() as u32;
    if dc + da <= 3 {
        // identify root with core_vertex
        let mut edges = core.edges().to_vec();
        for &(u, v) in appendage.edges() {
            let map = |x: u32| {
                if x == root {
                    core_vertex
                } else {
                    x + off
                }
            };
            edges.push((map(u), map(v)));
        }
        let joined = Graph::new(core.vertex_count() + appendage.vertex_count(), &edges)?;
        // drop the now-isolated slot that `root` occupied
        let keep: Vec<u32> = (0..joined.vertex_count() as u32)
            .filter(|&v| v != root + off)
            .collect();
        Ok(induced_relabel(&joined, &keep))
    } else if dc <= 2 && da <= 2 {
        let mut edges = core.edges().to_vec();
        edges.extend(appendage.edges().iter().map(|&(u, v)| (u + off, v + off)));
        edges.push((core_vertex, root + off));
        Graph::new(core.vertex_count() + appendage.vertex_count(), &edges)
    } else {
        Err(GraphError::DegreeOverflow(root))
    }
}

fn induced_relabel(g: &Graph, keep: &[u32]) -> Graph {
    let mut map = vec![u32::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        map[v as usize] = i as u32;
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| map[u as usize] != u32::MAX && map[v as usize] != u32::MAX)
        .map(|&(u, v)| (map[u as usize], map[v as usize]))
        .collect();
    Graph::new(keep.len(), &edges).expect("induced subgraph stays simple")
}

/// Arrange `length` copies of `core` in a cycle, joining copy i's `w` to
/// copy i+1's `u` by an edge. `core` must be cubic except for `u` and `w`
/// of valence two.
pub fn pseudocycle(core: &Graph, u: u32, w: u32, length: usize) -> Result<Graph, GraphError> {
    if length < 3 {
        return Err(GraphError::PseudocycleTooShort(length));
    }
    if u == w {
        return Err(GraphError::BadPseudocycleCore(
            "attachment vertices coincide".into(),
        ));
    }
    for v in 0..core.vertex_count() as u32 {
        let want = if v == u || v == w { 2 } else { 3 };
        if core.degree(v) != want {
            return Err(GraphError::BadPseudocycleCore(format!(
                "vertex {v} has valence {}, expected {want}",
                core.degree(v)
            )));
        }
    }
    let k = core.vertex_count() as u32;
    let mut edges = Vec::new();
    for i in 0..length as u32 {
        let off = i * k;
        edges.extend(core.edges().iter().map(|&(a, b)| (a + off, b + off)));
        let next = ((i + 1) % length as u32) * k;
        edges.push((w + i * k, u + next));
    }
    Graph::new(core.vertex_count() * length, &edges)
}

/// Stabilization result. The contracted graph may have loops or parallel
/// edges, so it is kept as an explicit multigraph; `simple()` converts back
/// when no defects arose.
#[derive(Debug, Clone)]
pub struct Multigraph {
    pub vertex_count: usize,
    /// non-loop edges with multiplicity, u < v, sorted
    pub edges: Vec<(u32, u32)>,
    pub loops: Vec<u32>,
}

impl Multigraph {
    pub fn genus(&self) -> i64 {
        (self.edges.len() + self.loops.len()) as i64 - self.vertex_count as i64 + 1
    }
}

#[derive(Debug, Clone)]
pub struct StabilizationReport {
    pub result: Multigraph,
    pub created_loops: usize,
    pub created_parallel_edges: usize,
    /// components with no valence-3 vertex, counted before contraction and
    /// left untouched in the result
    pub cycle_components: usize,
}

impl StabilizationReport {
    pub fn is_simple(&self) -> bool {
        self.created_loops == 0 && self.created_parallel_edges == 0
    }

    pub fn simple(&self) -> Option<Graph> {
        if !self.is_simple() {
            return None;
        }
        Graph::new(self.result.vertex_count, &self.result.edges).ok()
    }
}

/// Contract every maximal path whose interior vertices all have valence two
/// into a single edge. Every vertex must have valence at least two.
pub fn stabilize(g: &Graph) -> Result<StabilizationReport, GraphError> {
    for v in 0..g.vertex_count() as u32 {
        if g.degree(v) < 2 {
            return Err(GraphError::LowValence(v, g.degree(v)));
        }
    }
    let stable: Vec<bool> = (0..g.vertex_count() as u32)
        .map(|v| g.degree(v) >= 3)
        .collect();

    // components that contain no stable vertex are cycles
    let mut cycle_vertices = vec![false; g.vertex_count()];
    let mut cycle_components = 0;
    for comp in g.components() {
        if comp.iter().all(|&v| !stable[v as usize]) {
            cycle_components += 1;
            for &v in &comp {
                cycle_vertices[v as usize] = true;
            }
        }
    }

    // kept vertices: stable ones plus untouched cycle components
    let keep: Vec<u32> = (0..g.vertex_count() as u32)
        .filter(|&v| stable[v as usize] || cycle_vertices[v as usize])
        .collect();
    let mut map = vec![u32::MAX; g.vertex_count()];
    for (i, &v) in keep.iter().enumerate() {
        map[v as usize] = i as u32;
    }

    let mut out_edges: Vec<(u32, u32)> = Vec::new();
    let mut out_loops: Vec<u32> = Vec::new();

    // cycle components pass through unchanged
    for &(u, v) in g.edges() {
        if cycle_vertices[u as usize] {
            out_edges.push((map[u as usize].min(map[v as usize]), map[u as usize].max(map[v as usize])));
        }
    }

    // walk maximal unstable paths from stable endpoints; each half-edge of a
    // path is traversed once
    let mut used = std::collections::HashSet::new();
    for &start in &keep {
        if !stable[start as usize] {
            continue;
        }
        for &first in g.neighbors(start) {
            if used.contains(&(start, first)) {
                continue;
            }
            // follow through valence-2 vertices
            let mut prev = start;
            let mut cur = first;
            used.insert((start, first));
            while !stable[cur as usize] {
                let next = *g
                    .neighbors(cur)
                    .iter()
                    .find(|&&x| x != prev)
                    .expect("valence-2 interior vertex has a second neighbor");
                prev = cur;
                cur = next;
            }
            used.insert((cur, prev));
            let (a, b) = (map[start as usize], map[cur as usize]);
            if a == b {
                out_loops.push(a);
            } else {
                out_edges.push((a.min(b), a.max(b)));
            }
        }
    }

    out_edges.sort_unstable();
    out_loops.sort_unstable();
    let mut parallel = 0;
    let mut seen: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for &e in &out_edges {
        *seen.entry(e).or_insert(0) += 1;
    }
    for (_, m) in seen {
        parallel += m - 1;
    }
    Ok(StabilizationReport {
        result: Multigraph {
            vertex_count: keep.len(),
            edges: out_edges,
            loops: out_loops.clone(),
        },
        created_loops: out_loops.len(),
        created_parallel_edges: parallel,
        cycle_components,
    })
}

// ---------------------------------------------------------------------------
// graph6 / DOT
// ---------------------------------------------------------------------------

/// graph6 encoding: size prefix N(n), then the upper-triangular adjacency
/// bitmap packed into 6-bit chunks, each offset by 63.
pub fn emit_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        return Err(GraphError::TooLarge(n));
    }
    let bits = g.upper_triangle_bits();
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - i);
            }
        }
        out.push((val + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes: Vec<u8> = text.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(GraphError::Graph6("empty input".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Graph6(format!("byte {b} out of range")));
        }
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(GraphError::Graph6("8-byte sizes not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(GraphError::Graph6("truncated size prefix".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = (nbits + 5) / 6;
    if rest.len() != need {
        return Err(GraphError::Graph6(format!(
            "expected {need} payload bytes for {n} vertices, got {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            if bit >= nbits {
                break 'outer;
            }
            let byte = rest[bit / 6] - 63;
            if (byte >> (5 - bit % 6)) & 1 == 1 {
                edges.push((u as u32, v as u32));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn emit_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push('}');
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// named graphs
// ---------------------------------------------------------------------------

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n as usize, &edges).unwrap()
}

pub fn complete_bipartite(a: u32, b: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::new((a + b) as usize, &edges).unwrap()
}

pub fn cycle(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n as usize, &edges).unwrap()
}

pub fn tetrahedron() -> Graph {
    complete(4)
}

pub fn k33() -> Graph {
    complete_bipartite(3, 3)
}

pub fn prism() -> Graph {
    Graph::new(
        6,
        &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for v in 0u32..8 {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::new(8, &edges).unwrap()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0u32..5 {
        edges.push((i, (i + 1) % 5)); // outer 5-cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::new(10, &edges).unwrap()
}

pub fn heawood() -> Graph {
    // point-line incidence graph of the Fano plane: 14-cycle plus chords
    let mut edges: Vec<(u32, u32)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (1..14).step_by(2) {
        let j = (i + 5) % 14;
        edges.push((i.min(j), i.max(j)));
    }
    Graph::new(14, &edges).unwrap()
}

/// Two triangles sharing an edge (K4 minus an edge); vertices 2 and 3 are
/// the valence-2 ends.
pub fn diamond() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_examples() {
        assert_eq!(tetrahedron().genus(), 3);
        assert_eq!(tetrahedron().pinch(0, 1).unwrap().genus(), 3);
        assert_eq!(k33().genus(), 4);
    }

    #[test]
    fn cubic_and_connected() {
        assert!(tetrahedron().is_cubic());
        assert!(tetrahedron().is_connected());
        let two_k4 = tetrahedron().disjoint_union(&tetrahedron());
        assert!(two_k4.is_cubic());
        assert!(!two_k4.is_connected());
        let path3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!path3.is_cubic());
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange(5, 2))
        ));
    }

    #[test]
    fn pinch_adds_valence_two_vertex() {
        let g = tetrahedron().pinch(0, 1).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(4), 2);
        assert!(g.pinch(0, 1).is_err());
    }

    #[test]
    fn stabilize_inverts_pinch() {
        let pinched = tetrahedron().pinch(0, 1).unwrap();
        let report = stabilize(&pinched).unwrap();
        assert!(report.is_simple());
        assert_eq!(report.cycle_components, 0);
        let back = report.simple().unwrap();
        assert_eq!(back.vertex_count(), 4);
        assert_eq!(back.edge_count(), 6);
    }

    #[test]
    fn stabilize_pure_cycle() {
        let report = stabilize(&cycle(3)).unwrap();
        assert_eq!(report.cycle_components, 1);
        assert_eq!(report.result.vertex_count, 3);
        assert_eq!(report.created_loops, 0);
    }

    #[test]
    fn stabilize_rejects_low_valence() {
        let path3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            stabilize(&path3),
            Err(GraphError::LowValence(_, _))
        ));
    }

    #[test]
    fn stabilize_parallel_edge_detection() {
        // two vertices joined by three length-2 paths (theta with all paths
        // subdivided): contraction creates parallel edges
        let theta = Graph::new(
            5,
            &[(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)],
        )
        .unwrap();
        let report = stabilize(&theta).unwrap();
        assert!(report.created_parallel_edges >= 1);
        assert!(!report.is_simple());
        assert_eq!(report.result.genus(), theta.genus());
    }

    #[test]
    fn stabilize_loop_detection() {
        // vertex 0 cubic: one edge to a triangle-ish blob, plus a pinched
        // loop back to itself
        let g = Graph::new(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (4, 5), (3, 5), (2, 3), (0, 1)],
        );
        assert!(g.is_err()); // duplicate guard sanity
        let looped = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 2)]).unwrap();
        // vertex 2 is the only stable vertex; both attached cycles contract
        // to loops at it
        let report = stabilize(&looped).unwrap();
        assert_eq!(report.created_loops, 2);
        assert_eq!(report.result.genus(), looped.genus());
    }

    #[test]
    fn attach_merges_or_links() {
        // leaf + valence-2 root: merge
        let core = Graph::new(3, &[(0, 1), (0, 2)]).unwrap(); // 2-leaf star
        let pinched = tetrahedron().pinch(0, 1).unwrap();
        let g = attach_at_root(&core, 1, &pinched, Root::Vertex(4)).unwrap();
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.genus(), 3);
        // valence-2 + valence-2: connecting edge
        let tri = cycle(3);
        let g2 = attach_at_root(&tri, 0, &pinched, Root::Vertex(4)).unwrap();
        assert_eq!(g2.degree(0), 3);
        assert_eq!(g2.genus(), 4); // 3 (appendage) + 1 (triangle)
        // second attachment at a now-cubic vertex: rejected
        assert!(matches!(
            attach_at_root(&g2, 0, &pinched, Root::Vertex(4)),
            Err(GraphError::DegreeOverflow(0))
        ));
    }

    #[test]
    fn attach_at_edge_root_pinches_first() {
        let core = Graph::new(2, &[(0, 1)]).unwrap();
        let g = attach_at_root(&core, 1, &tetrahedron(), Root::Edge(0, 1)).unwrap();
        assert_eq!(g.genus(), 3);
        assert!(g.edges().len() == 8);
    }

    #[test]
    fn pseudocycle_of_k33_minus_edge() {
        let mut edges: Vec<(u32, u32)> = k33().edges().to_vec();
        edges.retain(|&e| e != (0, 3));
        let core = Graph::new(6, &edges).unwrap();
        let g = pseudocycle(&core, 0, 3, 3).unwrap();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.edge_count(), 27);
        assert_eq!(g.genus(), 10);
        assert!(g.is_cubic());
        assert!(g.is_connected());
        assert!(pseudocycle(&core, 0, 3, 2).is_err());
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(pseudocycle(&path, 0, 2, 3).is_err());
    }

    #[test]
    fn graph6_known_encodings() {
        assert_eq!(emit_graph6(&tetrahedron()).unwrap(), "C~");
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(emit_graph6(&single).unwrap(), "@");
        assert_eq!(parse_graph6("C~").unwrap(), tetrahedron());
    }

    #[test]
    fn graph6_round_trip() {
        for g in [tetrahedron(), k33(), prism(), cube(), petersen(), heawood()] {
            let text = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&text).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err()); // missing payload
        assert!(parse_graph6("C~~").is_err()); // extra payload
        assert!(parse_graph6("\x1f").is_err()); // byte below range
    }

    #[test]
    fn named_graphs_are_what_they_claim() {
        for (g, v, gen) in [
            (tetrahedron(), 4, 3),
            (k33(), 6, 4),
            (prism(), 6, 4),
            (cube(), 8, 5),
            (petersen(), 10, 6),
            (heawood(), 14, 8),
        ] {
            assert!(g.is_cubic(), "not cubic at {v} vertices");
            assert!(g.is_connected());
            assert_eq!(g.vertex_count(), v);
            assert_eq!(g.genus(), gen);
        }
        assert_eq!(diamond().genus(), 2);
        assert_eq!(diamond().degree(2), 2);
        assert_eq!(diamond().degree(3), 2);
    }

    #[test]
    fn dot_output_contains_edges() {
        let dot = emit_dot(&tetrahedron());
        assert!(dot.starts_with("graph {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
