//! Equality and inequality gadgets for 2-dicolouring.

use serde::{Deserialize, Serialize};

use super::ReductionError;
use crate::digraph::{Digraph, VertexId};
use crate::solver::{brute::all_dicolourings, is_dicritical};

/// Gadgets are checked by listing every 2-dicolouring.
pub const EXHAUSTIVE_MAX_ORDER: usize = 22;

/// A digraph with two marked terminals and a forced colour relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub digraph: Digraph,
    pub ends: (VertexId, VertexId),
}

impl Gadget {
    /// The digon: the plain ≠-gadget.
    pub fn digon() -> Self {
        Self { digraph: Digraph::from_arcs(2, [(0, 1), (1, 0)]).expect("valid digon"), ends: (0, 1) }
    }

    /// `Some(true)` if the ends agree in every 2-dicolouring, `Some(false)` if
    /// they differ in every one, `None` if neither (or none exists).
    pub fn forced_relation(&self) -> Result<Option<bool>, ReductionError> {
        let n = self.digraph.order();
        if n > EXHAUSTIVE_MAX_ORDER {
            return Err(ReductionError::GadgetTooLarge(n));
        }
        let all = all_dicolourings(&self.digraph, 2);
        let (a, b) = self.ends;
        if all.is_empty() {
            return Ok(None);
        }
        let same = all.iter().filter(|c| c.colour(a) == c.colour(b)).count();
        Ok(if same == all.len() {
            Some(true)
        } else if same == 0 {
            Some(false)
        } else {
            None
        })
    }

    pub fn is_eq(&self) -> Result<bool, ReductionError> {
        Ok(self.forced_relation()? == Some(true))
    }

    pub fn is_neq(&self) -> Result<bool, ReductionError> {
        Ok(self.forced_relation()? == Some(false))
    }
}

/// `G3 \ uv` for a 3-dicritical oriented `G3`: its ends `u`, `v` get the same
/// colour in every 2-dicolouring.
pub fn make_eq_gadget(g3: &Digraph, arc: (VertexId, VertexId)) -> Result<Gadget, ReductionError> {
    if !g3.has_arc(arc.0, arc.1) {
        return Err(ReductionError::MissingArc(arc.0, arc.1));
    }
    if !is_dicritical(g3, 3).is_dicritical {
        return Err(ReductionError::NotDicritical);
    }
    let digraph = g3.without_arc(arc.0, arc.1).map_err(|_| ReductionError::MissingArc(arc.0, arc.1))?;
    let g = Gadget { digraph, ends: arc };
    if !g.is_eq()? {
        return Err(ReductionError::GadgetUnsound("equality gadget"));
    }
    Ok(g)
}

/// Copies `g` into `arcs`, gluing its ends to `a`, `b` and numbering the
/// other vertices from `*next`.
pub(crate) fn embed(g: &Gadget, a: VertexId, b: VertexId, next: &mut usize, arcs: &mut Vec<(VertexId, VertexId)>) {
    let n = g.digraph.order();
    let mut map = vec![usize::MAX; n];
    map[g.ends.0] = a;
    map[g.ends.1] = b;
    for m in map.iter_mut().filter(|m| **m == usize::MAX) {
        *m = *next;
        *next += 1;
    }
    arcs.extend(g.digraph.arcs().map(|(x, y)| (map[x], map[y])));
}

/// Digon-free ≠-gadget between `u` and `w`: a directed triangle
/// `v1 → v2 → w → v1` with =-gadgets `u–v1` and `u–v2`. Each =-gadget may be
/// glued either way round; the first gluing that checks out is returned.
pub fn make_neq_gadget(eq: &Gadget) -> Result<Gadget, ReductionError> {
    let (u, v1, v2, w) = (0, 1, 2, 3);
    let flipped = Gadget { digraph: eq.digraph.clone(), ends: (eq.ends.1, eq.ends.0) };
    for (g1, g2) in [(eq, eq), (eq, &flipped), (&flipped, eq), (&flipped, &flipped)] {
        let mut next = 4;
        let mut arcs = vec![(v1, v2), (v2, w), (w, v1)];
        embed(g1, u, v1, &mut next, &mut arcs);
        embed(g2, u, v2, &mut next, &mut arcs);
        let digraph = Digraph::from_arcs(next, arcs).expect("gadget arcs in range");
        let g = Gadget { digraph, ends: (u, w) };
        if g.digraph.is_oriented() && g.is_neq()? {
            return Ok(g);
        }
    }
    Err(ReductionError::GadgetUnsound("inequality gadget"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn digon_is_neq() {
        assert!(Gadget::digon().is_neq().unwrap());
    }

    #[test]
    fn eq_gadget_preconditions() {
        let c3 = Digraph::directed_cycle(3);
        assert!(matches!(make_eq_gadget(&c3, (0, 1)), Err(ReductionError::NotDicritical)));
        assert!(matches!(make_eq_gadget(&c3, (1, 0)), Err(ReductionError::MissingArc(1, 0))));
        // The bidirected triangle is 3-dicritical but has digons; the
        // construction itself does not require orientation.
        let k3 = Graph::complete(3).bidirect();
        let g = make_eq_gadget(&k3, (0, 1)).unwrap();
        assert!(g.is_eq().unwrap());
    }
}
