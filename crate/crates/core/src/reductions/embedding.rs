//! Plane embeddings of the variable–clause incidence graph.
//!
//! Incidence-graph vertices are numbered `0..V` for variables `1..=V` and
//! `V + c` for clause `c`. Faces are cyclic vertex sequences; the tool checks
//! their combinatorial consistency only.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::cnf::CnfFormula;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarIncidenceEmbedding {
    pub faces: Vec<Vec<usize>>,
    /// For clause `(x ∨ y ∨ z)`, the faces holding the angles `x,C,y`,
    /// `y,C,z` and `z,C,x`. Derived from `faces` when absent.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub clause_faces: Vec<[usize; 3]>,
}

fn bad(msg: impl Into<String>) -> ReductionError {
    ReductionError::InconsistentEmbedding(msg.into())
}

fn clause_vars(phi: &CnfFormula, c: usize) -> [usize; 3] {
    let cl = &phi.clauses()[c];
    [0, 1, 2].map(|i| cl[i].unsigned_abs() as usize - 1)
}

/// Incidence graph of a 3-CNF formula with distinct variables per clause.
pub fn incidence_graph(phi: &CnfFormula) -> Result<Graph, ReductionError> {
    phi.check_3cnf()?;
    let v = phi.num_vars();
    let mut g = Graph::empty(v + phi.clauses().len());
    for c in 0..phi.clauses().len() {
        let vars = clause_vars(phi, c);
        if vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2] {
            return Err(ReductionError::RepeatedVariable(c));
        }
        for x in vars {
            g.insert_edge(x, v + c);
        }
    }
    Ok(g)
}

impl PlanarIncidenceEmbedding {
    /// Checks `faces` against the incidence graph of `phi` and fills in the
    /// per-clause faces.
    pub fn from_faces(phi: &CnfFormula, faces: Vec<Vec<usize>>) -> Result<Self, ReductionError> {
        let mut e = Self { faces, clause_faces: Vec::new() };
        e.clause_faces = e.derive(phi)?;
        Ok(e)
    }

    /// Traces the faces of a rotation system: `rotation[h]` lists the
    /// neighbours of `h` in cyclic order.
    pub fn from_rotation(phi: &CnfFormula, rotation: &[Vec<usize>]) -> Result<Self, ReductionError> {
        let mut next: HashMap<(usize, usize), usize> = HashMap::new();
        for (b, rot) in rotation.iter().enumerate() {
            for (i, &a) in rot.iter().enumerate() {
                next.insert((a, b), rot[(i + 1) % rot.len()]);
            }
        }
        let mut darts: Vec<(usize, usize)> = next.keys().copied().collect();
        darts.sort_unstable();
        let mut used = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for start in darts {
            if used.contains(&start) {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            while used.insert(dart) {
                face.push(dart.0);
                let c = *next.get(&dart).ok_or_else(|| bad("rotation is not symmetric"))?;
                dart = (dart.1, c);
            }
            if dart != start {
                return Err(bad("rotation is not symmetric"));
            }
            faces.push(face);
        }
        Self::from_faces(phi, faces)
    }

    /// Re-checks the embedding, including any stored clause faces.
    pub fn validate(&self, phi: &CnfFormula) -> Result<(), ReductionError> {
        let derived = self.derive(phi)?;
        if !self.clause_faces.is_empty() && self.clause_faces != derived {
            return Err(bad("clause faces disagree with the face lists"));
        }
        Ok(())
    }

    fn derive(&self, phi: &CnfFormula) -> Result<Vec<[usize; 3]>, ReductionError> {
        let h = incidence_graph(phi)?;
        let nh = h.order();
        if !h.is_connected() {
            return Err(bad("incidence graph is disconnected"));
        }
        let mut count: HashMap<(usize, usize), usize> = HashMap::new();
        let mut angles: HashMap<(usize, usize, usize), usize> = HashMap::new();
        for (f, face) in self.faces.iter().enumerate() {
            let len = face.len();
            if len < 2 {
                return Err(bad(format!("face {f} has fewer than two vertices")));
            }
            for i in 0..len {
                let (a, b) = (face[i], face[(i + 1) % len]);
                if a >= nh || b >= nh || !h.has_edge(a, b) {
                    return Err(bad(format!("face {f} steps along a non-edge {a}-{b}")));
                }
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
                let p = face[(i + len - 1) % len];
                angles.entry((p.min(b), a, p.max(b))).or_insert(f);
            }
        }
        let edges: Vec<(usize, usize)> = h.edges().collect();
        if edges.len() != count.len() || edges.iter().any(|e| count.get(e) != Some(&2)) {
            return Err(bad("every incidence edge must lie on exactly two face sides"));
        }
        let euler = nh as i64 - edges.len() as i64 + self.faces.len() as i64;
        if euler != 2 {
            return Err(bad(format!("Euler characteristic {euler}, not a plane embedding")));
        }
        let v = phi.num_vars();
        (0..phi.clauses().len())
            .map(|c| {
                let [x, y, z] = clause_vars(phi, c);
                let mut out = [0; 3];
                for (slot, (a, b)) in [(x, y), (y, z), (z, x)].into_iter().enumerate() {
                    out[slot] = *angles
                        .get(&(a.min(b), v + c, a.max(b)))
                        .ok_or_else(|| bad(format!("no face has the angle {a},{},{b}", v + c)))?;
                }
                Ok(out)
            })
            .collect()
    }
}

/// A random 3-CNF formula with a plane embedding of its incidence graph:
/// variables sit on a line and each clause is drawn above or below it, nested
/// so that no edges cross. Returns `None` if no connected instance turned up.
pub fn random_planar_instance(
    num_vars: usize,
    num_clauses: usize,
    seed: u64,
) -> Option<(CnfFormula, PlanarIncidenceEmbedding)> {
    if num_vars < 3 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        // (a, b, c, above)
        let mut placed: Vec<(usize, usize, usize, bool)> = Vec::new();
        let mut tries = 0;
        while placed.len() < num_clauses && tries < 1000 {
            tries += 1;
            let mut t = [0usize; 3];
            loop {
                for x in &mut t {
                    *x = rng.random_range(0..num_vars);
                }
                t.sort_unstable();
                if t[0] < t[1] && t[1] < t[2] {
                    break;
                }
            }
            let above = rng.random_bool(0.5);
            for side in [above, !above] {
                let ok = placed
                    .iter()
                    .filter(|p| p.3 == side)
                    .all(|&(a, b, c, _)| compatible((a, b, c), (t[0], t[1], t[2])));
                if ok {
                    placed.push((t[0], t[1], t[2], side));
                    break;
                }
            }
        }
        if placed.len() < num_clauses {
            continue;
        }
        let clauses: Vec<Vec<i32>> = placed
            .iter()
            .map(|&(a, b, c, _)| {
                [a, b, c].iter().map(|&x| if rng.random_bool(0.5) { x as i32 + 1 } else { -(x as i32 + 1) }).collect()
            })
            .collect();
        let phi = CnfFormula::new(num_vars, clauses).expect("literals in range");
        let Ok(h) = incidence_graph(&phi) else { continue };
        if !h.is_connected() {
            continue;
        }
        let rotation = drawing_rotation(num_vars, &placed);
        if let Ok(e) = PlanarIncidenceEmbedding::from_rotation(&phi, &rotation) {
            return Some((phi, e));
        }
    }
    None
}

/// Two same-side clauses do not cross if their spans are interior-disjoint or
/// one lies within a gap of the other.
fn compatible(p: (usize, usize, usize), q: (usize, usize, usize)) -> bool {
    let inside =
        |s: (usize, usize, usize), t: (usize, usize, usize)| (s.0 >= t.0 && s.2 <= t.1) || (s.0 >= t.1 && s.2 <= t.2);
    p.2 <= q.0 || q.2 <= p.0 || inside(p, q) || inside(q, p)
}

/// Rotation system of the straight-line drawing with variable `x` at
/// `(x, 0)` and each clause at its middle variable, at a height that keeps
/// it inside the triangle cut out by its enclosing clause.
fn drawing_rotation(num_vars: usize, placed: &[(usize, usize, usize, bool)]) -> Vec<Vec<usize>> {
    let mut order: Vec<usize> = (0..placed.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(placed[i].2 - placed[i].0));
    let mut height = vec![0.0f64; placed.len()];
    for (pos, &i) in order.iter().enumerate() {
        let (a, b, c, side) = placed[i];
        let parent = order[..pos]
            .iter()
            .copied()
            .filter(|&j| placed[j].3 == side)
            .filter(|&j| {
                let (pa, pb, pc, _) = placed[j];
                (a >= pa && c <= pb) || (a >= pb && c <= pc)
            })
            .min_by_key(|&j| placed[j].2 - placed[j].0);
        height[i] = match parent {
            None => 1.0,
            Some(j) => {
                let (pa, pb, pc, _) = placed[j];
                let frac =
                    if c <= pb { (b - pa) as f64 / (pb - pa) as f64 } else { (pc - b) as f64 / (pc - pb) as f64 };
                0.5 * height[j] * frac
            }
        };
    }
    let mut pts: Vec<(f64, f64)> = (0..num_vars).map(|x| (x as f64, 0.0)).collect();
    for (i, &(_, b, _, side)) in placed.iter().enumerate() {
        pts.push((b as f64, if side { height[i] } else { -height[i] }));
    }
    let mut nbrs = vec![Vec::new(); pts.len()];
    for (i, &(a, b, c, _)) in placed.iter().enumerate() {
        for x in [a, b, c] {
            nbrs[x].push(num_vars + i);
            nbrs[num_vars + i].push(x);
        }
    }
    for (h, list) in nbrs.iter_mut().enumerate() {
        let (px, py) = pts[h];
        list.sort_by(|&p, &q| {
            let ang = |t: usize| (pts[t].1 - py).atan2(pts[t].0 - px);
            ang(p).total_cmp(&ang(q))
        });
    }
    nbrs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_clauses() -> CnfFormula {
        CnfFormula::new(4, vec![vec![1, 2, 3], vec![-2, 3, 4]]).unwrap()
    }

    #[test]
    fn random_instances_embed() {
        for seed in 0..30 {
            let (phi, e) = random_planar_instance(6, 5, seed).expect("instance");
            e.validate(&phi).unwrap();
            let h = incidence_graph(&phi).unwrap();
            assert_eq!(h.order() as i64 - h.edges().count() as i64 + e.faces.len() as i64, 2);
        }
    }

    #[test]
    fn rejects_inconsistent_faces() {
        let phi = two_clauses();
        assert!(PlanarIncidenceEmbedding::from_faces(&phi, vec![vec![0, 4, 1, 5]]).is_err());
        let repeated = CnfFormula::new(2, vec![vec![1, 1, 2]]).unwrap();
        assert!(matches!(incidence_graph(&repeated), Err(ReductionError::RepeatedVariable(0))));
        let isolated = CnfFormula::new(4, vec![vec![1, 2, 3]]).unwrap();
        assert!(PlanarIncidenceEmbedding::from_faces(&isolated, vec![]).is_err());
    }

    #[test]
    fn hand_built_single_clause() {
        // One clause C = vertex 3 joined to variables 0, 1, 2: a star, one face.
        let phi = CnfFormula::new(3, vec![vec![1, -2, 3]]).unwrap();
        let e = PlanarIncidenceEmbedding::from_faces(&phi, vec![vec![3, 0, 3, 1, 3, 2]]).unwrap();
        assert_eq!(e.clause_faces, vec![[0, 0, 0]]);
    }
}
