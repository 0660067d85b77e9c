//! Constructions relating L-frame domination to other problems, with
//! certificates that can be checked by brute force on small inputs.

pub mod circle;
pub mod cover;
pub mod sat;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use circle::{circle_to_diagonal, circle_to_vertical, ChordDiagram};
pub use cover::{eds_to_epg, vc_to_epg, BipartiteGraph, CoverLayout};
pub use sat::{monotone3sat_to_lframes, MonotoneClause, MonotoneDrawing, SatLayout};

use crate::graph::{
    brute_force_mds, build_intersection_graph, exact_mds_capped, is_dominating, DominatingSet, IntersectionGraph,
};
use crate::instance::GeomInstance;

/// Largest source instance we are willing to solve by enumeration.
pub const SOURCE_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid source instance: {0}")]
    InvalidSource(String),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("layout check failed for variable {variable}, clause {clause}")]
    ConstructionFailed { variable: usize, clause: usize },
    #[error("source instance too large to verify ({0} items, limit {SOURCE_LIMIT})")]
    SourceTooLarge(usize),
    #[error("reduced instance too large to verify ({0} frames)")]
    ReducedTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Source {
    CircleDiagonal(ChordDiagram),
    CircleVertical(ChordDiagram),
    MonotoneSat { drawing: MonotoneDrawing, layout: SatLayout },
    VertexCover { graph: IntersectionGraph, layout: CoverLayout },
    EdgeDomination(BipartiteGraph),
}

/// A reduced instance together with everything needed to map solutions both ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionCertificate {
    pub source: Source,
    pub instance: GeomInstance,
    /// Reduced optimum minus source optimum. For the satisfiability
    /// construction: the target size that decides satisfiability.
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SourceSolution {
    /// Chords or graph vertices.
    Vertices(Vec<usize>),
    Assignment(Vec<bool>),
    /// Indices into the bipartite edge list.
    Edges(Vec<usize>),
}

impl ReductionCertificate {
    pub fn circle_diagonal(c: &ChordDiagram) -> Self {
        ReductionCertificate { source: Source::CircleDiagonal(c.clone()), instance: circle_to_diagonal(c), offset: 0 }
    }

    pub fn circle_vertical(c: &ChordDiagram) -> Self {
        ReductionCertificate { source: Source::CircleVertical(c.clone()), instance: circle_to_vertical(c), offset: 0 }
    }

    pub fn monotone_sat(d: &MonotoneDrawing) -> Result<Self, ReductionError> {
        let (instance, layout) = monotone3sat_to_lframes(d)?;
        Ok(ReductionCertificate {
            source: Source::MonotoneSat { drawing: d.clone(), layout },
            instance,
            offset: d.variables,
        })
    }

    pub fn vertex_cover(g: &IntersectionGraph) -> Self {
        let (instance, layout) = vc_to_epg(g);
        ReductionCertificate { source: Source::VertexCover { graph: g.clone(), layout }, instance, offset: g.n() }
    }

    pub fn edge_domination(b: &BipartiteGraph) -> Self {
        ReductionCertificate { source: Source::EdgeDomination(b.clone()), instance: eds_to_epg(b), offset: 0 }
    }

    /// Rebuild the reduced instance from the source alone.
    pub fn rebuild(&self) -> Result<ReductionCertificate, ReductionError> {
        Ok(match &self.source {
            Source::CircleDiagonal(c) => Self::circle_diagonal(c),
            Source::CircleVertical(c) => Self::circle_vertical(c),
            Source::MonotoneSat { drawing, .. } => Self::monotone_sat(drawing)?,
            Source::VertexCover { graph, .. } => Self::vertex_cover(graph),
            Source::EdgeDomination(b) => Self::edge_domination(b),
        })
    }

    /// Frames corresponding to a source solution.
    pub fn forward(&self, sol: &SourceSolution) -> DominatingSet {
        match (&self.source, sol) {
            (Source::CircleDiagonal(_) | Source::CircleVertical(_), SourceSolution::Vertices(v)) => {
                DominatingSet::new(v.clone())
            }
            (Source::MonotoneSat { layout, .. }, SourceSolution::Assignment(a)) => DominatingSet::new(
                a.iter().zip(&layout.literal).map(|(&val, &(t, f))| if val { t } else { f }).collect(),
            ),
            (Source::VertexCover { layout, .. }, SourceSolution::Vertices(v)) => {
                let mut out: Vec<usize> = layout.pendant.iter().map(|p| p.0).collect();
                out.extend(v.iter().map(|&k| layout.vertex[k]));
                DominatingSet::new(out)
            }
            (Source::EdgeDomination(_), SourceSolution::Edges(e)) => DominatingSet::new(e.clone()),
            _ => panic!("solution kind does not match the certificate"),
        }
    }

    /// Source solution read back from a dominating set of the reduced instance.
    pub fn backward(&self, ds: &DominatingSet) -> SourceSolution {
        match &self.source {
            Source::CircleDiagonal(_) | Source::CircleVertical(_) => SourceSolution::Vertices(ds.members().to_vec()),
            Source::MonotoneSat { layout, .. } => {
                SourceSolution::Assignment(layout.literal.iter().map(|&(t, _)| ds.contains(t)).collect())
            }
            Source::VertexCover { layout, .. } => {
                let mut cover = Vec::new();
                for (k, &f) in layout.vertex.iter().enumerate() {
                    if ds.contains(f) {
                        cover.push(k);
                    }
                }
                // an edge frame stands in for its larger endpoint
                for &((_, b), f) in &layout.edge {
                    if ds.contains(f) {
                        cover.push(b);
                    }
                }
                cover.sort_unstable();
                cover.dedup();
                SourceSolution::Vertices(cover)
            }
            Source::EdgeDomination(_) => SourceSolution::Edges(ds.members().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    /// Source optimum. For satisfiability: fewest unsatisfied clauses.
    pub source_optimum: usize,
    pub reduced_optimum: usize,
    pub offset: usize,
    /// Mapping the source optimum forward gives a dominating set of the
    /// predicted size, and mapping the reduced optimum back gives a valid
    /// source solution that is no worse.
    pub maps_ok: bool,
    pub holds: bool,
}

/// Solve both sides by exhaustive search and compare.
pub fn verify_equivalence(cert: &ReductionCertificate) -> Result<EquivalenceReport, ReductionError> {
    let too_big = |k: usize| if k > SOURCE_LIMIT { Err(ReductionError::SourceTooLarge(k)) } else { Ok(()) };
    too_big(match &cert.source {
        Source::CircleDiagonal(c) | Source::CircleVertical(c) => c.chords(),
        Source::MonotoneSat { drawing, .. } => drawing.variables,
        Source::VertexCover { graph, .. } => graph.n(),
        Source::EdgeDomination(b) => b.edges.len(),
    })?;
    let g = build_intersection_graph(&cert.instance);
    if g.n() > 64 {
        return Err(ReductionError::ReducedTooLarge(g.n()));
    }
    let reduced = exact_mds_capped(&g, 64).map_err(|_| ReductionError::ReducedTooLarge(g.n()))?;
    let back = cert.backward(&reduced);

    let (source_optimum, source_solution, back_ok, holds) = match &cert.source {
        Source::CircleDiagonal(c) | Source::CircleVertical(c) => {
            let cg = c.circle_graph();
            let opt = brute_force_mds(&cg);
            let SourceSolution::Vertices(v) = &back else { unreachable!() };
            let ok = is_dominating(&cg, v) && v.len() <= reduced.len();
            (opt.len(), SourceSolution::Vertices(opt.members().to_vec()), ok, reduced.len() == opt.len())
        }
        Source::MonotoneSat { drawing, .. } => {
            let (unsat, witness) = drawing.brute_force();
            let SourceSolution::Assignment(a) = &back else { unreachable!() };
            // a size-n dominating set must encode a satisfying assignment
            let ok = reduced.len() != drawing.variables || drawing.satisfied_by(a);
            let holds = (reduced.len() == drawing.variables) == (unsat == 0) && reduced.len() >= drawing.variables;
            (unsat, SourceSolution::Assignment(witness), ok, holds)
        }
        Source::VertexCover { graph, .. } => {
            let opt = cover::brute_force_vertex_cover(graph);
            let SourceSolution::Vertices(v) = &back else { unreachable!() };
            let ok = cover::is_vertex_cover(graph, v) && v.len() + graph.n() <= reduced.len();
            (opt.len(), SourceSolution::Vertices(opt.clone()), ok, reduced.len() == opt.len() + graph.n())
        }
        Source::EdgeDomination(b) => {
            let opt = cover::brute_force_eds(b);
            let SourceSolution::Edges(e) = &back else { unreachable!() };
            let ok = b.is_edge_dominating(e) && e.len() <= reduced.len();
            (opt.len(), SourceSolution::Edges(opt.clone()), ok, reduced.len() == opt.len())
        }
    };

    let fwd = cert.forward(&source_solution);
    let fwd_ok = match &cert.source {
        Source::MonotoneSat { .. } => {
            source_optimum != 0 || (is_dominating(&g, fwd.members()) && fwd.len() == cert.offset)
        }
        _ => is_dominating(&g, fwd.members()) && fwd.len() == source_optimum + cert.offset,
    };
    Ok(EquivalenceReport {
        source_optimum,
        reduced_optimum: reduced.len(),
        offset: cert.offset,
        maps_ok: fwd_ok && back_ok,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_certificate() {
        let c = ChordDiagram::new(vec![0, 1, 0, 2, 1, 2]).unwrap();
        for cert in [ReductionCertificate::circle_diagonal(&c), ReductionCertificate::circle_vertical(&c)] {
            let r = verify_equivalence(&cert).unwrap();
            assert!(r.holds && r.maps_ok, "{r:?}");
        }
    }

    #[test]
    fn sat_certificates() {
        let cert = ReductionCertificate::monotone_sat(&sat::golden_unsatisfiable()).unwrap();
        let r = verify_equivalence(&cert).unwrap();
        assert!(r.holds && r.maps_ok);
        assert!(r.reduced_optimum > 1);
        let d =
            MonotoneDrawing { variables: 1, clauses: vec![MonotoneClause { positive: true, vars: vec![0], depth: 1 }] };
        let r = verify_equivalence(&ReductionCertificate::monotone_sat(&d).unwrap()).unwrap();
        assert_eq!((r.source_optimum, r.reduced_optimum), (0, 1));
    }

    #[test]
    fn cover_certificates() {
        let g = IntersectionGraph::from_edges(3, &[(0, 1), (1, 2)]);
        let r = verify_equivalence(&ReductionCertificate::vertex_cover(&g)).unwrap();
        assert_eq!((r.source_optimum, r.reduced_optimum, r.offset), (1, 4, 3));
        assert!(r.holds && r.maps_ok);
        let b = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 0), (1, 1)]).unwrap();
        let r = verify_equivalence(&ReductionCertificate::edge_domination(&b)).unwrap();
        assert!(r.holds && r.maps_ok);
    }

    #[test]
    fn oversized_source_rejected() {
        let g = IntersectionGraph::new(21);
        assert!(matches!(
            verify_equivalence(&ReductionCertificate::vertex_cover(&g)),
            Err(ReductionError::ReducedTooLarge(_)) | Err(ReductionError::SourceTooLarge(_))
        ));
    }
}
