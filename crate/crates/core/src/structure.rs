//! Block decompositions and the block-defined classes built on them: cacti,
//! directed cacti and directed Gallai forests.
//!
//! Blocks are always taken on the underlying simple graph. A digraph block
//! is then classified from its arcs, so a lone digon is a bidirected `K₂`.

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{Digraph, VertexId};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Sorted vertex list.
    pub vertices: Vec<VertexId>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    /// Vertices of degree 0; they belong to no block.
    pub isolated: Vec<VertexId>,
    /// Edges of the block forest, as `(block index, cut vertex)`.
    pub forest_edges: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    /// Blocks with at most one cut vertex, paired with that cut vertex (the
    /// attachment), if any.
    pub fn leaf_blocks(&self) -> Vec<(usize, Option<VertexId>)> {
        let mut cuts = vec![Vec::new(); self.blocks.len()];
        for &(b, c) in &self.forest_edges {
            cuts[b].push(c);
        }
        cuts.iter().enumerate().filter(|(_, c)| c.len() <= 1).map(|(b, c)| (b, c.first().copied())).collect()
    }
}

/// Biconnected components (Hopcroft–Tarjan, iterative).
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbours(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    let mut is_cut = vec![false; n];

    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut i)) = stack.last_mut() {
            if *i < adj[v].len() {
                let u = adj[v][*i];
                *i += 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
                continue;
            }
            stack.pop();
            if parent == usize::MAX {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent != root {
                    is_cut[parent] = true;
                }
                let mut edges = Vec::new();
                while let Some(e) = edge_stack.pop() {
                    edges.push((e.0.min(e.1), e.0.max(e.1)));
                    if e == (parent, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                vertices.sort_unstable();
                vertices.dedup();
                blocks.push(Block { vertices, edges });
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut forest_edges = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if is_cut[v] {
                forest_edges.push((bi, v));
            }
        }
    }
    BlockDecomposition { blocks, cut_vertices, isolated: (0..n).filter(|&v| adj[v].is_empty()).collect(), forest_edges }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockKind {
    SingleArc,
    DirectedCycle,
    BidirectedOddCycle,
    /// Includes the digon, `K₂` with both arcs.
    BidirectedClique,
    Other,
}

/// Classifies a block of `D`'s underlying graph by the arcs of `D` on it.
pub fn classify_block(d: &Digraph, block: &Block) -> BlockKind {
    let s = block.vertices.len();
    let m = block.edges.len();
    let digons = block.edges.iter().filter(|&&(u, v)| d.has_arc(u, v) && d.has_arc(v, u)).count();
    if m == 1 {
        return if digons == 1 { BlockKind::BidirectedClique } else { BlockKind::SingleArc };
    }
    let is_cycle = m == s;
    if digons == m {
        if m == s * (s - 1) / 2 {
            return BlockKind::BidirectedClique;
        }
        if is_cycle && s % 2 == 1 {
            return BlockKind::BidirectedOddCycle;
        }
        return BlockKind::Other;
    }
    if digons == 0 && is_cycle {
        let inside = |v: usize, out: bool| {
            block.vertices.iter().filter(|&&u| if out { d.has_arc(v, u) } else { d.has_arc(u, v) }).count()
        };
        if block.vertices.iter().all(|&v| inside(v, true) == 1 && inside(v, false) == 1) {
            return BlockKind::DirectedCycle;
        }
    }
    BlockKind::Other
}

/// Every block is a cycle or a single edge.
pub fn is_cactus(g: &Graph) -> bool {
    block_decomposition(g).blocks.iter().all(|b| b.edges.len() == 1 || b.edges.len() == b.vertices.len())
}

fn block_kinds(d: &Digraph) -> Vec<BlockKind> {
    block_decomposition(&d.underlying_graph()).blocks.iter().map(|b| classify_block(d, b)).collect()
}

/// Oriented, with every block a directed cycle or a single arc.
pub fn is_directed_cactus(d: &Digraph) -> bool {
    d.is_oriented() && block_kinds(d).iter().all(|k| matches!(k, BlockKind::SingleArc | BlockKind::DirectedCycle))
}

/// Every block is a single arc, a directed cycle, a bidirected odd cycle or
/// a bidirected clique.
pub fn is_directed_gallai_forest(d: &Digraph) -> bool {
    block_kinds(d).iter().all(|&k| k != BlockKind::Other)
}

/// An induced forest with at least `⌈2n/3⌉` vertices, built by peeling leaf
/// blocks: a pendant edge contributes its free end, a leaf cycle contributes
/// all vertices but its attachment (which is then discarded).
pub fn cactus_induced_forest(g: &Graph) -> Result<Vec<VertexId>, StructureError> {
    if !is_cactus(g) {
        return Err(StructureError::NotCactus);
    }
    let n = g.order();
    let mut alive: Vec<VertexId> = (0..n).collect();
    let mut forest = Vec::new();
    loop {
        let sub = g.induced(&alive).expect("alive vertices are distinct");
        let dec = block_decomposition(&sub);
        if dec.blocks.is_empty() {
            forest.extend(alive.iter().copied());
            break;
        }
        let (bi, attach) = dec.leaf_blocks()[0];
        let block = &dec.blocks[bi];
        let mut remove: Vec<usize> = Vec::new();
        if block.edges.len() == 1 {
            match attach {
                Some(y) => {
                    let z = block.vertices.iter().copied().find(|&x| x != y).expect("edge block");
                    forest.push(alive[z]);
                    remove.push(z);
                }
                None => {
                    forest.extend(block.vertices.iter().map(|&x| alive[x]));
                    remove.extend(block.vertices.iter().copied());
                }
            }
        } else {
            let y = attach.unwrap_or(block.vertices[0]);
            forest.extend(block.vertices.iter().filter(|&&x| x != y).map(|&x| alive[x]));
            remove.extend(block.vertices.iter().copied());
        }
        alive = alive.iter().enumerate().filter(|(i, _)| !remove.contains(i)).map(|(_, &v)| v).collect();
    }
    forest.sort_unstable();
    Ok(forest)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub edges: usize,
    /// `3(n-1)/2`.
    pub bound: Rational64,
    /// Equality holds: connected with every block a triangle.
    pub tight: bool,
}

pub fn cactus_edge_bound(g: &Graph) -> Result<EdgeBound, StructureError> {
    if g.order() == 0 {
        return Err(StructureError::Empty);
    }
    if !is_cactus(g) {
        return Err(StructureError::NotCactus);
    }
    let dec = block_decomposition(g);
    let tight = g.is_connected() && dec.blocks.iter().all(|b| b.vertices.len() == 3 && b.edges.len() == 3);
    Ok(EdgeBound { edges: g.edge_count(), bound: Rational64::new(3 * (g.order() as i64 - 1), 2), tight })
}

/// `{v : d⁺(v) = d⁻(v) = k - 1}`.
pub fn low_vertices(d: &Digraph, k: usize) -> Vec<VertexId> {
    if k == 0 {
        return Vec::new();
    }
    (0..d.order()).filter(|&v| d.out_degree(v) == k - 1 && d.in_degree(v) == k - 1).collect()
}

/// The low vertices induce a directed cactus (oriented `d`) or a directed
/// Gallai forest (general `d`).
pub fn gallai_property_check(d: &Digraph, k: usize) -> bool {
    let h = d.induced(&low_vertices(d, k)).expect("vertex list is valid");
    if d.is_oriented() {
        is_directed_cactus(&h)
    } else {
        is_directed_gallai_forest(&h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub vertices: Vec<VertexId>,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub n: usize,
    pub m: usize,
    pub blocks: Vec<BlockReport>,
    pub cut_vertices: Vec<VertexId>,
    pub isolated: Vec<VertexId>,
    pub is_cactus: bool,
    pub is_directed_cactus: bool,
    pub is_directed_gallai_forest: bool,
}

pub fn structure_report(d: &Digraph) -> StructureReport {
    let g = d.underlying_graph();
    let dec = block_decomposition(&g);
    let blocks: Vec<BlockReport> =
        dec.blocks.iter().map(|b| BlockReport { vertices: b.vertices.clone(), kind: classify_block(d, b) }).collect();
    let directed_cactus =
        d.is_oriented() && blocks.iter().all(|b| matches!(b.kind, BlockKind::SingleArc | BlockKind::DirectedCycle));
    let gallai = blocks.iter().all(|b| b.kind != BlockKind::Other);
    StructureReport {
        n: d.order(),
        m: d.arc_count(),
        is_cactus: is_cactus(&g),
        is_directed_cactus: directed_cactus,
        is_directed_gallai_forest: gallai,
        cut_vertices: dec.cut_vertices,
        isolated: dec.isolated,
        blocks,
    }
}

/// Random connected cactus on exactly `n` vertices: starting from one
/// vertex, repeatedly attach at a uniform vertex either an edge (probability
/// ½) or a cycle of length 3 to 6, truncated to fit.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut size = n.min(1);
    while size < n {
        let at = rng.random_range(0..size);
        let room = n - size;
        if rng.random_bool(0.5) || room < 2 {
            edges.push((at, size));
            size += 1;
        } else {
            let len = rng.random_range(3..=6).min(room + 1);
            let mut prev = at;
            for i in 0..len - 1 {
                edges.push((prev, size + i));
                prev = size + i;
            }
            edges.push((prev, at));
            size += len - 1;
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangles_chain(t: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..t {
            let a = 2 * i;
            e.extend([(a, a + 1), (a + 1, a + 2), (a, a + 2)]);
        }
        Graph::from_edges(2 * t + 1, e).unwrap()
    }

    #[test]
    fn decomposition_examples() {
        let bow = triangles_chain(2);
        let dec = block_decomposition(&bow);
        assert_eq!(dec.blocks.len(), 2);
        assert_eq!(dec.cut_vertices, vec![2]);
        assert_eq!(dec.leaf_blocks().len(), 2);

        let tree = Graph::path(7);
        assert_eq!(block_decomposition(&tree).blocks.len(), 6);
        assert_eq!(block_decomposition(&Graph::cycle(6)).blocks.len(), 1);

        let g = Graph::from_edges(4, [(0, 1)]).unwrap();
        assert_eq!(block_decomposition(&g).isolated, vec![2, 3]);
    }

    #[test]
    fn classes() {
        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (2, 3)];
        let d = Digraph::from_arcs(4, arcs.clone()).unwrap();
        assert!(is_directed_cactus(&d));
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(!is_directed_cactus(&digon));
        assert!(is_directed_gallai_forest(&digon));
        let tt3 = Digraph::transitive_tournament(3);
        assert!(is_cactus(&tt3.underlying_graph()));
        assert!(!is_directed_cactus(&tt3));
        arcs.push((3, 1));
        assert!(!is_cactus(&Digraph::from_arcs(4, arcs).unwrap().underlying_graph()));
        let c4 = Graph::cycle(4).bidirect();
        assert_eq!(structure_report(&c4).blocks[0].kind, BlockKind::Other);
        let c5 = Graph::cycle(5).bidirect();
        assert_eq!(structure_report(&c5).blocks[0].kind, BlockKind::BidirectedOddCycle);
    }

    #[test]
    fn induced_forests() {
        assert_eq!(cactus_induced_forest(&Graph::cycle(3)).unwrap().len(), 2);
        assert!(cactus_induced_forest(&triangles_chain(2)).unwrap().len() >= 4);
        assert_eq!(cactus_induced_forest(&Graph::path(10)).unwrap().len(), 10);
        assert_eq!(cactus_induced_forest(&Graph::complete(4)), Err(StructureError::NotCactus));
    }

    #[test]
    fn edge_bounds() {
        let b = cactus_edge_bound(&triangles_chain(4)).unwrap();
        assert_eq!((b.edges, b.bound, b.tight), (12, Rational64::from_integer(12), true));
        assert!(!cactus_edge_bound(&Graph::path(2)).unwrap().tight);
        let c5 = cactus_edge_bound(&Graph::cycle(5)).unwrap();
        assert_eq!((c5.edges, c5.bound, c5.tight), (5, Rational64::from_integer(6), false));
        assert_eq!(cactus_edge_bound(&Graph::empty(0)), Err(StructureError::Empty));
    }

    #[test]
    fn low_vertex_structure() {
        let st11 = Digraph::circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap();
        assert!(low_vertices(&st11, 4).is_empty());
        assert!(gallai_property_check(&st11, 4));
        let k4 = Graph::complete(4).bidirect();
        assert_eq!(low_vertices(&k4, 4).len(), 4);
        assert!(gallai_property_check(&k4, 4));
    }

    #[test]
    fn generator_is_reproducible() {
        let a = random_cactus(30, 5);
        assert_eq!(a, random_cactus(30, 5));
        assert_eq!(a.order(), 30);
        assert!(is_cactus(&a) && a.is_connected());
    }
}
