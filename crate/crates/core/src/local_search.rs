//! Bounded-swap local search and the diagonal-anchored approximations built on it.

use thiserror::Error;

use crate::geometry::{anchored_side, Side};
use crate::graph::*;
use crate::instance::{GeomInstance, InstanceError};

pub const DEFAULT_K: usize = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocalSearchError {
    #[error("swap bound k must be at least 1")]
    ZeroK,
    #[error("frames are not all anchored on the same side of the diagonal")]
    NotOneSided,
    #[error("frame `{0}` is not anchored on the diagonal")]
    NotAnchored(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialSolution {
    #[default]
    Greedy,
    FullVertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalSearchConfig {
    pub k: usize,
    pub initial: InitialSolution,
    pub max_iterations: Option<usize>,
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        LocalSearchConfig { k: DEFAULT_K, initial: InitialSolution::Greedy, max_iterations: None }
    }
}

/// Replace `removed` (a subset of the current solution) by `added`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Swap {
    pub removed: Vec<usize>,
    pub added: Vec<usize>,
}

/// Lexicographic k-combinations of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    first: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), first: true }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let k = self.idx.len();
        if k > self.n {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.idx.clone());
        }
        let mut pos = k;
        while pos > 0 && self.idx[pos - 1] == self.n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return None;
        }
        self.idx[pos - 1] += 1;
        for j in pos..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(self.idx.clone())
    }
}

/// First improving swap in the fixed order: removal sets by increasing size
/// then lexicographically, replacement sets likewise.
pub fn find_improving_swap(g: &IntersectionGraph, current: &[usize], k: usize) -> Option<Swap> {
    let n = g.n();
    let mut sol = current.to_vec();
    sol.sort_unstable();
    sol.dedup();
    let mut in_sol = vec![false; n];
    let mut count = vec![0u32; n];
    for &a in &sol {
        in_sol[a] = true;
        count[a] += 1;
        for &w in g.neighbors(a) {
            count[w] += 1;
        }
    }
    let mut lost = vec![0u32; n];
    let mut touched = Vec::new();
    for size in 1..=k.min(sol.len()) {
        for pick in Combinations::new(sol.len(), size) {
            let removed: Vec<usize> = pick.iter().map(|&i| sol[i]).collect();
            for &a in &removed {
                for w in std::iter::once(a).chain(g.neighbors(a).iter().copied()) {
                    if lost[w] == 0 {
                        touched.push(w);
                    }
                    lost[w] += 1;
                }
            }
            let mut orphaned: Vec<usize> = touched.iter().copied().filter(|&w| lost[w] == count[w]).collect();
            for &w in &touched {
                lost[w] = 0;
            }
            touched.clear();
            orphaned.sort_unstable();

            if orphaned.is_empty() {
                return Some(Swap { removed, added: Vec::new() });
            }
            let mut candidates: Vec<usize> = orphaned
                .iter()
                .flat_map(|&u| std::iter::once(u).chain(g.neighbors(u).iter().copied()))
                .filter(|&v| !in_sol[v])
                .collect();
            candidates.sort_unstable();
            candidates.dedup();
            for m in 1..size {
                for choice in Combinations::new(candidates.len(), m) {
                    let added: Vec<usize> = choice.iter().map(|&i| candidates[i]).collect();
                    let covers = orphaned.iter().all(|&u| added.iter().any(|&v| v == u || g.has_edge(u, v)));
                    if covers {
                        return Some(Swap { removed, added });
                    }
                }
            }
        }
    }
    None
}

pub fn is_k_locally_optimal(g: &IntersectionGraph, set: &[usize], k: usize) -> bool {
    find_improving_swap(g, set, k).is_none()
}

/// Apply first-improvement swaps from `start` until none is left (or the
/// iteration budget runs out).
pub fn improve(g: &IntersectionGraph, start: &DominatingSet, k: usize, max_iterations: Option<usize>) -> DominatingSet {
    debug_assert!(is_dominating(g, start.members()));
    let mut current = start.members().to_vec();
    let mut rounds = 0usize;
    while max_iterations.is_none_or(|m| rounds < m) {
        let Some(swap) = find_improving_swap(g, &current, k) else { break };
        current.retain(|v| !swap.removed.contains(v));
        current.extend(swap.added);
        current.sort_unstable();
        rounds += 1;
    }
    DominatingSet::new(current)
}

pub fn local_search_mds(g: &IntersectionGraph, config: &LocalSearchConfig) -> Result<DominatingSet, LocalSearchError> {
    if config.k == 0 {
        return Err(LocalSearchError::ZeroK);
    }
    if config.k > 3 {
        log::warn!("local search with k = {} enumerates many swaps", config.k);
    }
    let start = match config.initial {
        InitialSolution::Greedy => greedy_mds(g),
        InitialSolution::FullVertexSet => DominatingSet::new((0..g.n()).collect()),
    };
    Ok(improve(g, &start, config.k, config.max_iterations))
}

fn sides(inst: &GeomInstance) -> Result<(GeomInstance, Vec<Side>), LocalSearchError> {
    let inst = inst.rects_to_frames()?;
    let diag = inst.diagonal.ok_or(InstanceError::MissingDiagonal)?;
    let frames = inst.frame_list().expect("converted to frames");
    let sides = frames
        .iter()
        .map(|f| anchored_side(f, &diag).ok_or_else(|| LocalSearchError::NotAnchored(f.id.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((inst, sides))
}

/// Local search on frames that are all anchored on one side of the diagonal.
pub fn ptas_one_sided(inst: &GeomInstance, k: usize) -> Result<DominatingSet, LocalSearchError> {
    let (inst, sides) = sides(inst)?;
    if sides.windows(2).any(|w| w[0] != w[1]) {
        return Err(LocalSearchError::NotOneSided);
    }
    let g = build_intersection_graph(&inst);
    local_search_mds(&g, &LocalSearchConfig { k, ..Default::default() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSidedSolution {
    pub solution: DominatingSet,
    pub above: Vec<usize>,
    pub below: Vec<usize>,
    pub above_solution: DominatingSet,
    pub below_solution: DominatingSet,
}

/// Solve the frames above and below the diagonal separately and take the union.
pub fn approx_two_sided(inst: &GeomInstance, k: usize) -> Result<TwoSidedSolution, LocalSearchError> {
    let (inst, sides) = sides(inst)?;
    let g = build_intersection_graph(&inst);
    let above: Vec<usize> = (0..sides.len()).filter(|&i| sides[i] == Side::Above).collect();
    let below: Vec<usize> = (0..sides.len()).filter(|&i| sides[i] == Side::Below).collect();
    let config = LocalSearchConfig { k, ..Default::default() };
    let solve = |part: &[usize]| -> Result<DominatingSet, LocalSearchError> {
        let sub = local_search_mds(&g.induced(part), &config)?;
        Ok(DominatingSet::new(sub.iter().map(|i| part[i]).collect()))
    };
    let (above_solution, below_solution) = std::thread::scope(|s| {
        let h = s.spawn(|| solve(&above));
        let b = solve(&below);
        (h.join().expect("solver thread panicked"), b)
    });
    let (above_solution, below_solution) = (above_solution?, below_solution?);
    let solution = DominatingSet::new(above_solution.iter().chain(below_solution.iter()).collect());
    Ok(TwoSidedSolution { solution, above, below, above_solution, below_solution })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LFrame;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn star(leaves: usize) -> IntersectionGraph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        IntersectionGraph::from_edges(leaves + 1, &edges)
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> IntersectionGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        IntersectionGraph::from_edges(n, &edges)
    }

    // Every (A', M) pair with |M| < |A'| <= k, no ordering assumptions.
    fn has_improvement_oracle(g: &IntersectionGraph, set: &[usize], k: usize) -> bool {
        let n = g.n();
        let outside: Vec<usize> = (0..n).filter(|v| !set.contains(v)).collect();
        for rmask in 1u32..(1 << set.len()) {
            let r = rmask.count_ones() as usize;
            if r > k {
                continue;
            }
            for amask in 0u32..(1 << outside.len()) {
                if amask.count_ones() as usize >= r {
                    continue;
                }
                let mut cand: Vec<usize> =
                    set.iter().enumerate().filter(|(i, _)| rmask & (1 << i) == 0).map(|(_, &v)| v).collect();
                cand.extend(outside.iter().enumerate().filter(|(i, _)| amask & (1 << i) != 0).map(|(_, &v)| v));
                if is_dominating(g, &cand) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn star_from_leaves_collapses_to_centre() {
        let g = star(4);
        let s = improve(&g, &DominatingSet::new(vec![1, 2, 3, 4]), 2, None);
        assert_eq!(s.members(), &[0]);
    }

    #[test]
    fn optimal_input_is_stable() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = random_graph(&mut rng, 12, 0.3);
        let opt = exact_mds(&g).unwrap();
        assert_eq!(improve(&g, &opt, 2, None), opt);
    }

    #[test]
    fn full_vertex_start() {
        let g = star(3);
        let cfg = LocalSearchConfig { k: 2, initial: InitialSolution::FullVertexSet, max_iterations: None };
        assert_eq!(local_search_mds(&g, &cfg).unwrap().members(), &[0]);
    }

    #[test]
    fn zero_k_rejected() {
        let cfg = LocalSearchConfig { k: 0, ..Default::default() };
        assert_eq!(local_search_mds(&star(2), &cfg), Err(LocalSearchError::ZeroK));
    }

    #[test]
    fn results_are_locally_optimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n, 0.3);
            let cfg = LocalSearchConfig { k: 2, initial: InitialSolution::FullVertexSet, max_iterations: None };
            let s = local_search_mds(&g, &cfg).unwrap();
            assert!(is_dominating(&g, s.members()));
            assert!(!has_improvement_oracle(&g, s.members(), 2), "{g:?} {s:?}");
        }
    }

    #[test]
    fn swap_finder_agrees_with_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..80 {
            let n = rng.gen_range(2..=8);
            let g = random_graph(&mut rng, n, 0.35);
            let set: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
            if !is_dominating(&g, &set) {
                continue;
            }
            for k in 1..=3 {
                assert_eq!(find_improving_swap(&g, &set, k).is_some(), has_improvement_oracle(&g, &set, k));
            }
        }
    }

    #[test]
    fn one_sided_rejects_mixed_sides() {
        let inst =
            GeomInstance::frames(vec![LFrame::new("a", 0, 0, 2, 2).unwrap(), LFrame::new("b", 3, -3, -1, -1).unwrap()])
                .with_diagonal(0);
        assert_eq!(ptas_one_sided(&inst, 2), Err(LocalSearchError::NotOneSided));
        assert!(approx_two_sided(&inst, 2).is_ok());
    }

    #[test]
    fn unanchored_frame_rejected() {
        let inst = GeomInstance::frames(vec![LFrame::new("a", 1, 1, 2, 2).unwrap()]).with_diagonal(0);
        assert_eq!(ptas_one_sided(&inst, 2), Err(LocalSearchError::NotAnchored("a".into())));
    }

    #[test]
    fn two_sided_union_of_parts() {
        let inst = GeomInstance::frames(vec![
            LFrame::new("a", 0, 0, 3, 1).unwrap(),
            LFrame::new("b", 2, -2, 1, 4).unwrap(),
            LFrame::new("c", 1, -1, -2, -2).unwrap(),
        ])
        .with_diagonal(0);
        let r = approx_two_sided(&inst, 2).unwrap();
        assert_eq!(r.above, vec![0, 1]);
        assert_eq!(r.below, vec![2]);
        assert_eq!(r.solution.len(), r.above_solution.len() + r.below_solution.len());
        let g = build_intersection_graph(&inst);
        assert!(is_dominating(&g, r.solution.members()));
    }
}
