//! 3-SAT to 2-dicolourability.
//!
//! Each clause `(l_x ∨ l_y ∨ l_z)` becomes a directed 6-cycle
//! `x_C → u_C → y_C → v_C → z_C → w_C → x_C` plus a centre `t_C` joined to
//! `u_C, v_C, w_C` by ≠-gadgets. The vertices `u_C, v_C, w_C` are also tied
//! by ≠-gadgets to face vertices `t_F` (planar wiring) or to one shared hub.
//! A negated literal `¬a` puts a ≠-gadget between `a` and `a_C`; a positive
//! literal routes through a fresh `ā_C` with ≠-gadgets to both.

mod embedding;
mod gadgets;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cnf::{CnfError, CnfFormula};
use crate::digraph::{Digraph, VertexId};
use crate::solver::{is_k_dicolourable_sat, verify_dicolouring, Dicolouring};

pub use embedding::{incidence_graph, random_planar_instance, PlanarIncidenceEmbedding};
pub use gadgets::{make_eq_gadget, make_neq_gadget, Gadget, EXHAUSTIVE_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error("inconsistent embedding: {0}")]
    InconsistentEmbedding(String),
    #[error("clause {0} repeats a variable; planar wiring needs a simple incidence graph")]
    RepeatedVariable(usize),
    #[error("gadget source is not 3-dicritical")]
    NotDicritical,
    #[error("arc ({0}, {1}) is not in the gadget source")]
    MissingArc(VertexId, VertexId),
    #[error("{0} failed its exhaustive check")]
    GadgetUnsound(&'static str),
    #[error("gadget on {0} vertices is too large for exhaustive checking")]
    GadgetTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Wiring {
    /// One hub vertex in place of every face vertex.
    Hub,
    /// One vertex per face of the supplied embedding.
    Planar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NeqKind {
    Digon,
    Oriented,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseRoles {
    /// `x_C, y_C, z_C`.
    pub literal: [VertexId; 3],
    /// `u_C, v_C, w_C`.
    pub spacer: [VertexId; 3],
    pub centre: VertexId,
    /// `ā_C` for each positive literal.
    pub negation: [Option<VertexId>; 3],
    /// Face (or hub) vertex tied to each spacer.
    pub face: [VertexId; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoleMap {
    /// Vertex of variable `i + 1`.
    pub variables: Vec<VertexId>,
    pub clauses: Vec<ClauseRoles>,
    /// Face vertices `t_F`, or the single hub.
    pub faces: Vec<VertexId>,
    pub neq_gadgets: usize,
    pub neq_gadget_order: usize,
    pub neq_gadget_arcs: usize,
}

impl RoleMap {
    /// Order predicted from the construction: variables, face vertices,
    /// seven vertices per clause plus one per positive literal, plus the
    /// inner vertices of each ≠-gadget.
    pub fn expected_order(&self) -> usize {
        let clause: usize = self.clauses.iter().map(|c| 7 + c.negation.iter().flatten().count()).sum();
        self.variables.len() + self.faces.len() + clause + self.neq_gadgets * (self.neq_gadget_order - 2)
    }

    /// Six cycle arcs per clause plus the arcs of every ≠-gadget.
    pub fn expected_arcs(&self) -> usize {
        6 * self.clauses.len() + self.neq_gadgets * self.neq_gadget_arcs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionOutput {
    pub digraph: Digraph,
    pub roles: RoleMap,
    pub wiring: Wiring,
    pub neq: NeqKind,
}

impl ReductionOutput {
    /// Truth assignment read off a 2-dicolouring: a variable is true when it
    /// shares the colour of the face vertices.
    pub fn decode(&self, c: &Dicolouring) -> Vec<bool> {
        let reference = self.roles.faces.first().map(|&f| c.colour(f)).unwrap_or(1);
        self.roles.variables.iter().map(|&v| c.colour(v) == reference).collect()
    }
}

/// Builds the reduction with `neq` as the ≠-gadget. Planar wiring is used
/// when an embedding is supplied.
pub fn reduce_with(
    phi: &CnfFormula,
    embedding: Option<&PlanarIncidenceEmbedding>,
    neq: &Gadget,
    kind: NeqKind,
) -> Result<ReductionOutput, ReductionError> {
    phi.check_3cnf()?;
    let clause_faces = match embedding {
        Some(e) => {
            e.validate(phi)?;
            match e.clause_faces.is_empty() {
                true => PlanarIncidenceEmbedding::from_faces(phi, e.faces.clone())?.clause_faces,
                false => e.clause_faces.clone(),
            }
        }
        None => Vec::new(),
    };
    let nv = phi.num_vars();
    let mut next = nv;
    let face_count = embedding.map_or(1, |e| e.faces.len());
    let faces: Vec<VertexId> = (next..next + face_count).collect();
    next += face_count;

    let mut arcs = Vec::new();
    let mut pairs = Vec::new();
    let mut clauses = Vec::new();
    for (ci, clause) in phi.clauses().iter().enumerate() {
        let cyc: Vec<VertexId> = (next..next + 6).collect();
        next += 6;
        for i in 0..6 {
            arcs.push((cyc[i], cyc[(i + 1) % 6]));
        }
        let centre = next;
        next += 1;
        let literal = [cyc[0], cyc[2], cyc[4]];
        let spacer = [cyc[1], cyc[3], cyc[5]];
        let face = match embedding {
            Some(_) => clause_faces[ci].map(|f| faces[f]),
            None => [faces[0]; 3],
        };
        let mut negation = [None; 3];
        for i in 0..3 {
            pairs.push((centre, spacer[i]));
            pairs.push((face[i], spacer[i]));
            let var = clause[i].unsigned_abs() as usize - 1;
            if clause[i] < 0 {
                pairs.push((var, literal[i]));
            } else {
                let bar = next;
                next += 1;
                negation[i] = Some(bar);
                pairs.push((var, bar));
                pairs.push((bar, literal[i]));
            }
        }
        clauses.push(ClauseRoles { literal, spacer, centre, negation, face });
    }
    for &(a, b) in &pairs {
        gadgets::embed(neq, a, b, &mut next, &mut arcs);
    }
    let digraph = Digraph::from_arcs(next, arcs).expect("reduction arcs in range");
    let roles = RoleMap {
        variables: (0..nv).collect(),
        clauses,
        faces,
        neq_gadgets: pairs.len(),
        neq_gadget_order: neq.digraph.order(),
        neq_gadget_arcs: neq.digraph.arc_count(),
    };
    let wiring = if embedding.is_some() { Wiring::Planar } else { Wiring::Hub };
    Ok(ReductionOutput { digraph, roles, wiring, neq: kind })
}

/// The reduction with digons as ≠-gadgets.
pub fn reduce_digon(
    phi: &CnfFormula,
    embedding: Option<&PlanarIncidenceEmbedding>,
) -> Result<ReductionOutput, ReductionError> {
    reduce_with(phi, embedding, &Gadget::digon(), NeqKind::Digon)
}

/// The digon-free reduction, with ≠-gadgets built from `G3 \ arc` for a
/// 3-dicritical oriented `g3`.
pub fn reduce_oriented(
    phi: &CnfFormula,
    g3: &Digraph,
    arc: (VertexId, VertexId),
    embedding: Option<&PlanarIncidenceEmbedding>,
) -> Result<ReductionOutput, ReductionError> {
    let eq = make_eq_gadget(g3, arc)?;
    let neq = make_neq_gadget(&eq)?;
    reduce_with(phi, embedding, &neq, NeqKind::Oriented)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equivalence {
    pub satisfiable: bool,
    pub dicolourable: bool,
    /// A 2-dicolouring of the output, when one exists.
    pub colouring: Option<Dicolouring>,
    /// The assignment decoded from `colouring`.
    pub decoded: Option<Vec<bool>>,
    pub decoded_satisfies: Option<bool>,
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        self.satisfiable == self.dicolourable && self.decoded_satisfies != Some(false)
    }
}

/// Compares brute-force satisfiability of `phi` with 2-dicolourability of
/// the reduction output, and decodes any colouring found. The outputs are
/// large and highly structured, so the SAT back end decides them.
pub fn verify_equivalence(phi: &CnfFormula, out: &ReductionOutput) -> Result<Equivalence, ReductionError> {
    let model = phi.brute_force_model()?;
    let colouring = is_k_dicolourable_sat(&out.digraph, 2);
    debug_assert!(colouring.as_ref().is_none_or(|c| verify_dicolouring(&out.digraph, c)));
    let decoded = colouring.as_ref().map(|c| out.decode(c));
    Ok(Equivalence {
        satisfiable: model.is_some(),
        dicolourable: colouring.is_some(),
        decoded_satisfies: decoded.as_ref().map(|a| phi.evaluate(a)),
        decoded,
        colouring,
    })
}

/// A random 3-CNF formula with distinct variables in each clause (or with
/// repeats when fewer than three variables exist).
pub fn random_3cnf(num_vars: usize, num_clauses: usize, seed: u64) -> CnfFormula {
    use rand::seq::index::sample;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let clauses = (0..num_clauses)
        .map(|_| {
            let vars: Vec<usize> = if num_vars >= 3 {
                sample(&mut rng, num_vars, 3).into_vec()
            } else {
                (0..3).map(|_| rng.random_range(0..num_vars)).collect()
            };
            vars.into_iter().map(|v| if rng.random_bool(0.5) { v as i32 + 1 } else { -(v as i32 + 1) }).collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses).expect("literals in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_sign_patterns() -> CnfFormula {
        let clauses =
            (0..8).map(|m| (0..3).map(|i| if m >> i & 1 == 1 { i + 1 } else { -(i + 1) }).collect()).collect();
        CnfFormula::new(3, clauses).unwrap()
    }

    #[test]
    fn hub_examples() {
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        let out = reduce_digon(&phi, None).unwrap();
        let eq = verify_equivalence(&phi, &out).unwrap();
        assert!(eq.satisfiable && eq.dicolourable && eq.holds());

        let phi = all_sign_patterns();
        let out = reduce_digon(&phi, None).unwrap();
        let eq = verify_equivalence(&phi, &out).unwrap();
        assert!(!eq.dicolourable && eq.holds());
    }

    #[test]
    fn size_accounting() {
        // Two positive literals: 3 variables, hub, 6-cycle, centre, two ā_C.
        let phi = CnfFormula::new(3, vec![vec![1, -2, 3]]).unwrap();
        let out = reduce_digon(&phi, None).unwrap();
        assert_eq!(out.digraph.order(), 3 + 1 + 6 + 1 + 2);
        assert_eq!(out.digraph.order(), out.roles.expected_order());
        assert_eq!(out.digraph.arc_count(), out.roles.expected_arcs());
        // Three centre, three face and 1 + 2 + 2 literal gadgets.
        assert_eq!(out.roles.neq_gadgets, 11);
    }

    #[test]
    fn repeated_variables_in_hub_mode() {
        let phi = CnfFormula::new(1, vec![vec![1, 1, 1], vec![-1, -1, -1]]).unwrap();
        let eq = verify_equivalence(&phi, &reduce_digon(&phi, None).unwrap()).unwrap();
        assert!(!eq.satisfiable && eq.holds());
        let phi = CnfFormula::new(2, vec![vec![1, 1, -2], vec![-1, -1, -2]]).unwrap();
        let eq = verify_equivalence(&phi, &reduce_digon(&phi, None).unwrap()).unwrap();
        assert!(eq.satisfiable && eq.holds());
    }

    #[test]
    fn planar_wiring_matches_hub() {
        for seed in 0..10 {
            let (phi, e) = random_planar_instance(5, 4, seed).unwrap();
            let hub = verify_equivalence(&phi, &reduce_digon(&phi, None).unwrap()).unwrap();
            let out = reduce_digon(&phi, Some(&e)).unwrap();
            assert_eq!(out.roles.faces.len(), e.faces.len());
            let planar = verify_equivalence(&phi, &out).unwrap();
            assert!(hub.holds() && planar.holds());
            assert_eq!(hub.dicolourable, planar.dicolourable);
        }
    }
}
