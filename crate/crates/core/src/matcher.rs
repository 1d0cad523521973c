//! Attribute matching: score every attribute pair of two concepts, keep the
//! pairs at or above the satisfaction threshold, and select a maximum
//! bijective matching among them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::concept::{AttrRef, ScopedConcept};
use crate::error::Result;
use crate::lta::{LtaLevel, Scorer, Statement, Threshold};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidatePair {
    #[serde(serialize_with = "crate::render::serialize_display")]
    pub left: AttrRef,
    #[serde(serialize_with = "crate::render::serialize_display")]
    pub right: AttrRef,
    pub level: LtaLevel,
}

impl CandidatePair {
    pub fn new(left: AttrRef, right: AttrRef, level: LtaLevel) -> Self {
        Self { left, right, level }
    }

    pub fn mirrored(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone(), self.level)
    }
}

/// A bijective set of attribute pairs between two concepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchSet {
    pairs: Vec<CandidatePair>,
    left_size: usize,
    right_size: usize,
}

impl MatchSet {
    pub fn empty(left_size: usize, right_size: usize) -> Self {
        Self {
            pairs: Vec::new(),
            left_size,
            right_size,
        }
    }

    /// Pairs are kept sorted by (left, right).
    pub(crate) fn from_pairs(
        mut pairs: Vec<CandidatePair>,
        left_size: usize,
        right_size: usize,
    ) -> Self {
        pairs.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
        debug_assert!(pairs.len() <= left_size.min(right_size));
        Self {
            pairs,
            left_size,
            right_size,
        }
    }

    pub fn pairs(&self) -> &[CandidatePair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn total_level(&self) -> u32 {
        self.pairs.iter().map(|p| u32::from(p.level.value())).sum()
    }

    /// The same matching seen from the other concept.
    pub fn mirrored(&self) -> Self {
        Self::from_pairs(
            self.pairs.iter().map(CandidatePair::mirrored).collect(),
            self.right_size,
            self.left_size,
        )
    }
}

fn statements<'a>(c: &ScopedConcept<'a>) -> Vec<Statement<'a>> {
    c.concept
        .attributes()
        .iter()
        .map(|a| Statement {
            reference: c.attr_ref(a),
            text: a.text(),
            owner: c.concept.name(),
        })
        .collect()
}

/// Full level matrix in row-major order (`left` attributes by `right` attributes).
pub fn level_matrix(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    scorer: &Scorer<'_>,
) -> Result<Vec<CandidatePair>> {
    let ls = statements(left);
    let rs = statements(right);
    let (la, ra) = if scorer.mode().uses_heuristic() {
        (
            ls.iter().map(|s| Some(scorer.analyze(s))).collect(),
            rs.iter().map(|s| Some(scorer.analyze(s))).collect(),
        )
    } else {
        (vec![None; ls.len()], vec![None; rs.len()])
    };

    let mut out = Vec::with_capacity(ls.len() * rs.len());
    for (l, l_an) in ls.iter().zip(&la) {
        for (r, r_an) in rs.iter().zip(&ra) {
            let level = scorer.score_analyzed(l, r, || match (l_an, r_an) {
                (Some(a), Some(b)) => a.level(b),
                _ => unreachable!("heuristic scoring requires analyzed statements"),
            })?;
            out.push(CandidatePair::new(
                l.reference.clone(),
                r.reference.clone(),
                level,
            ));
        }
    }
    Ok(out)
}

/// Pairs scoring at or above `threshold`, sorted by level descending, then
/// left id, then right id.
pub fn candidate_pairs(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    scorer: &Scorer<'_>,
    threshold: Threshold,
) -> Result<Vec<CandidatePair>> {
    let mut candidates: Vec<_> = level_matrix(left, right, scorer)?
        .into_iter()
        .filter(|p| threshold.admits(p.level))
        .collect();
    sort_candidates(&mut candidates);
    Ok(candidates)
}

pub(crate) fn sort_candidates(candidates: &mut [CandidatePair]) {
    candidates.sort_by(|a, b| {
        b.level
            .cmp(&a.level)
            .then_with(|| a.left.cmp(&b.left))
            .then_with(|| a.right.cmp(&b.right))
    });
}

/// Scores, filters and matches two concepts. The work is done with the
/// concepts ordered by (context id, concept name) and mirrored back when
/// needed, so swapping the arguments mirrors the result exactly.
pub fn match_concepts(
    left: &ScopedConcept<'_>,
    right: &ScopedConcept<'_>,
    scorer: &Scorer<'_>,
    threshold: Threshold,
) -> Result<MatchSet> {
    if left.orientation_key() > right.orientation_key() {
        return Ok(match_concepts(right, left, scorer, threshold)?.mirrored());
    }
    let candidates = candidate_pairs(left, right, scorer, threshold)?;
    Ok(max_matching(
        &candidates,
        left.attribute_count(),
        right.attribute_count(),
    ))
}

struct Graph {
    lefts: Vec<AttrRef>,
    rights: Vec<AttrRef>,
    // (left index, right index, level), sorted by (left ref, right ref)
    edges: Vec<(usize, usize, LtaLevel)>,
}

impl Graph {
    fn new(candidates: &[CandidatePair]) -> Self {
        let mut unique: BTreeMap<(&AttrRef, &AttrRef), LtaLevel> = BTreeMap::new();
        for c in candidates {
            let level = unique.entry((&c.left, &c.right)).or_insert(c.level);
            *level = (*level).max(c.level);
        }
        let mut lefts: Vec<AttrRef> = unique.keys().map(|(l, _)| (*l).clone()).collect();
        let mut rights: Vec<AttrRef> = unique.keys().map(|(_, r)| (*r).clone()).collect();
        lefts.dedup();
        rights.sort();
        rights.dedup();
        let index = |v: &[AttrRef], x: &AttrRef| v.binary_search(x).expect("indexed");
        let edges = unique
            .iter()
            .map(|((l, r), level)| (index(&lefts, l), index(&rights, r), *level))
            .collect();
        Self {
            lefts,
            rights,
            edges,
        }
    }

    fn pair(&self, edge: usize) -> CandidatePair {
        let (l, r, level) = self.edges[edge];
        CandidatePair::new(self.lefts[l].clone(), self.rights[r].clone(), level)
    }
}

/// Maximum-weight bipartite matching by successive longest augmenting paths
/// (Bellman-Ford over the residual graph). Returns the optimum weight.
fn max_weight(n_left: usize, n_right: usize, edges: &[(usize, usize, i64)]) -> i64 {
    let mut match_of_right: Vec<Option<usize>> = vec![None; n_right];
    let mut match_of_left: Vec<Option<(usize, i64)>> = vec![None; n_left];
    let mut total = 0;

    loop {
        // best gain reaching each left / right vertex along an alternating path
        let mut gain_left: Vec<Option<i64>> = (0..n_left)
            .map(|l| match_of_left[l].is_none().then_some(0))
            .collect();
        let mut gain_right: Vec<Option<i64>> = vec![None; n_right];
        let mut via: Vec<Option<usize>> = vec![None; n_right];

        for _ in 0..=n_left + n_right {
            let mut changed = false;
            for &(l, r, w) in edges {
                if match_of_left[l].is_some_and(|(mr, _)| mr == r) {
                    continue;
                }
                if let Some(g) = gain_left[l] {
                    if gain_right[r].is_none_or(|cur| g + w > cur) {
                        gain_right[r] = Some(g + w);
                        via[r] = Some(l);
                        changed = true;
                    }
                }
            }
            for r in 0..n_right {
                if let (Some(l), Some(g)) = (match_of_right[r], gain_right[r]) {
                    let w = match_of_left[l].expect("matched").1;
                    if gain_left[l].is_none_or(|cur| g - w > cur) {
                        gain_left[l] = Some(g - w);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }

        let best = (0..n_right)
            .filter(|&r| match_of_right[r].is_none())
            .filter_map(|r| gain_right[r].map(|g| (g, r)))
            .max_by_key(|&(g, r)| (g, std::cmp::Reverse(r)));
        let Some((gain, end)) = best.filter(|&(g, _)| g > 0) else {
            return total;
        };

        // walk the path back, flipping matched and unmatched edges
        let mut r = end;
        loop {
            let l = via[r].expect("path");
            let w = edges
                .iter()
                .find(|&&(el, er, _)| el == l && er == r)
                .map(|e| e.2)
                .expect("edge");
            let previous = match_of_left[l].map(|(pr, _)| pr);
            match_of_left[l] = Some((r, w));
            match_of_right[r] = Some(l);
            match previous {
                Some(pr) => {
                    match_of_right[pr] = None;
                    r = pr;
                }
                None => break,
            }
        }
        total += gain;
    }
}

/// Maximum-cardinality bijective matching over `candidates`.
///
/// Among all maximum-cardinality matchings the one with the highest total
/// level wins; remaining ties go to the lexicographically smallest pair
/// list under (left, right) ordering. Input order and duplicate candidates
/// do not affect the result.
pub fn max_matching(candidates: &[CandidatePair], left_size: usize, right_size: usize) -> MatchSet {
    let graph = Graph::new(candidates);
    if graph.edges.is_empty() {
        return MatchSet::empty(left_size, right_size);
    }
    let (nl, nr) = (graph.lefts.len(), graph.rights.len());
    // Any extra pair outweighs every possible difference in level totals.
    let unit = 3 * nl.min(nr) as i64 + 1;
    let weight = |level: LtaLevel| unit + i64::from(level.value());
    let weighted: Vec<(usize, usize, i64)> = graph
        .edges
        .iter()
        .map(|&(l, r, level)| (l, r, weight(level)))
        .collect();
    let optimum = max_weight(nl, nr, &weighted);

    // Fix pairs greedily in ascending order, keeping an edge only if some
    // optimal matching uses it together with the pairs already fixed and
    // otherwise only larger pairs.
    let mut chosen = Vec::new();
    let mut fixed_weight = 0;
    let mut left_used = vec![false; nl];
    let mut right_used = vec![false; nr];
    for (i, &(l, r, w)) in weighted.iter().enumerate() {
        if fixed_weight == optimum {
            break;
        }
        if left_used[l] || right_used[r] {
            continue;
        }
        let rest: Vec<_> = weighted[i + 1..]
            .iter()
            .copied()
            .filter(|&(el, er, _)| el != l && er != r && !left_used[el] && !right_used[er])
            .collect();
        if fixed_weight + w + max_weight(nl, nr, &rest) == optimum {
            chosen.push(i);
            fixed_weight += w;
            left_used[l] = true;
            right_used[r] = true;
        }
    }

    MatchSet::from_pairs(
        chosen.into_iter().map(|e| graph.pair(e)).collect(),
        left_size,
        right_size,
    )
}

/// Exhaustive reference for [`max_matching`], used to check it.
pub mod oracle {
    use super::*;
    use crate::error::Error;

    pub const SIDE_LIMIT: usize = 10;

    /// Enumerates every bijective subset of `candidates` and returns the one
    /// [`max_matching`] is specified to return.
    pub fn brute_force_matching(
        candidates: &[CandidatePair],
        left_size: usize,
        right_size: usize,
    ) -> Result<MatchSet> {
        if left_size > SIDE_LIMIT || right_size > SIDE_LIMIT {
            return Err(Error::OracleBoundExceeded {
                left: left_size,
                right: right_size,
                limit: SIDE_LIMIT,
            });
        }
        let mut edges: Vec<CandidatePair> = Vec::new();
        for c in candidates {
            match edges
                .iter_mut()
                .find(|e| e.left == c.left && e.right == c.right)
            {
                Some(e) => e.level = e.level.max(c.level),
                None => edges.push(c.clone()),
            }
        }
        let mut lefts: Vec<&AttrRef> = edges.iter().map(|e| &e.left).collect();
        lefts.sort();
        lefts.dedup();

        let mut best: Option<Vec<CandidatePair>> = None;
        let mut current = Vec::new();
        enumerate(&edges, &lefts, 0, &mut current, &mut best);
        let pairs = best.unwrap_or_default();
        Ok(MatchSet::from_pairs(pairs, left_size, right_size))
    }

    fn sorted(pairs: &[CandidatePair]) -> Vec<(&AttrRef, &AttrRef)> {
        let mut v: Vec<_> = pairs.iter().map(|p| (&p.left, &p.right)).collect();
        v.sort();
        v
    }

    fn better(a: &[CandidatePair], b: &[CandidatePair]) -> bool {
        let total = |p: &[CandidatePair]| p.iter().map(|c| c.level.value() as u32).sum::<u32>();
        (a.len(), total(a))
            .cmp(&(b.len(), total(b)))
            .then_with(|| sorted(b).cmp(&sorted(a)))
            .is_gt()
    }

    fn enumerate(
        edges: &[CandidatePair],
        lefts: &[&AttrRef],
        depth: usize,
        current: &mut Vec<CandidatePair>,
        best: &mut Option<Vec<CandidatePair>>,
    ) {
        if depth == lefts.len() {
            if best.as_ref().is_none_or(|b| better(current, b)) {
                *best = Some(current.clone());
            }
            return;
        }
        // leave this left attribute unmatched
        enumerate(edges, lefts, depth + 1, current, best);
        for e in edges.iter().filter(|e| &e.left == lefts[depth]) {
            if current.iter().any(|c| c.right == e.right) {
                continue;
            }
            current.push(e.clone());
            enumerate(edges, lefts, depth + 1, current, best);
            current.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::oracle::brute_force_matching;
    use super::*;
    use crate::concept::ConceptRef;

    fn cand(l: &str, r: &str, level: u32) -> CandidatePair {
        CandidatePair::new(
            ConceptRef::new("L", "C").attr(l),
            ConceptRef::new("R", "D").attr(r),
            LtaLevel::new(level).unwrap(),
        )
    }

    fn ids(m: &MatchSet) -> Vec<(String, String)> {
        m.pairs()
            .iter()
            .map(|p| (p.left.attr.clone(), p.right.attr.clone()))
            .collect()
    }

    fn s(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn crossing_candidates_give_two_pairs() {
        let c = [
            cand("a1", "b1", 2),
            cand("a1", "b2", 2),
            cand("a2", "b1", 2),
        ];
        let m = max_matching(&c, 2, 2);
        assert_eq!(ids(&m), s(&[("a1", "b2"), ("a2", "b1")]));
        assert_eq!(m, brute_force_matching(&c, 2, 2).unwrap());
    }

    #[test]
    fn empty_candidates() {
        let m = max_matching(&[], 3, 4);
        assert!(m.is_empty());
        assert_eq!((m.left_size(), m.right_size()), (3, 4));
        assert_eq!(brute_force_matching(&[], 3, 4).unwrap(), m);
    }

    #[test]
    fn disjoint_diagonal() {
        let c = [
            cand("a3", "b3", 2),
            cand("a4", "b4", 2),
            cand("a6", "b6", 2),
        ];
        let m = max_matching(&c, 6, 6);
        assert_eq!(ids(&m), s(&[("a3", "b3"), ("a4", "b4"), ("a6", "b6")]));
        assert_eq!(brute_force_matching(&c, 6, 6).unwrap(), m);
    }

    #[test]
    fn single_and_conflicting_candidates() {
        let one = [cand("a1", "b1", 3)];
        assert_eq!(
            ids(&brute_force_matching(&one, 1, 1).unwrap()),
            s(&[("a1", "b1")])
        );
        assert_eq!(ids(&max_matching(&one, 1, 1)), s(&[("a1", "b1")]));

        let shared_left = [cand("a1", "b1", 2), cand("a1", "b2", 2)];
        assert_eq!(brute_force_matching(&shared_left, 1, 2).unwrap().len(), 1);
        assert_eq!(ids(&max_matching(&shared_left, 1, 2)), s(&[("a1", "b1")]));
    }

    #[test]
    fn higher_total_level_breaks_cardinality_ties() {
        let c = [cand("a1", "b1", 2), cand("a1", "b2", 3)];
        assert_eq!(ids(&max_matching(&c, 1, 2)), s(&[("a1", "b2")]));
        // but never at the expense of cardinality
        let c = [
            cand("a1", "b1", 3),
            cand("a1", "b2", 2),
            cand("a2", "b1", 2),
        ];
        assert_eq!(
            ids(&max_matching(&c, 2, 2)),
            s(&[("a1", "b2"), ("a2", "b1")])
        );
    }

    #[test]
    fn oracle_bound() {
        assert!(brute_force_matching(&[], 11, 2).is_err());
        assert!(brute_force_matching(&[], 10, 10).is_ok());
    }

    #[test]
    fn duplicates_and_order_do_not_matter() {
        let c = [
            cand("a2", "b1", 2),
            cand("a1", "b1", 2),
            cand("a1", "b1", 3),
            cand("a1", "b2", 2),
        ];
        let mut rev = c.to_vec();
        rev.reverse();
        assert_eq!(max_matching(&c, 2, 2), max_matching(&rev, 2, 2));
        assert_eq!(
            max_matching(&c, 2, 2),
            brute_force_matching(&c, 2, 2).unwrap()
        );
    }
}
