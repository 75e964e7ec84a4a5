//! Exact minimum hitting set for small set families.

use crate::vset::VertexSet;

/// A minimum set meeting every member of `family`, or `None` if some member
/// is empty. Branch and bound: branch on the vertices of the smallest
/// unhit member, bound by a greedy packing of pairwise disjoint unhit
/// members. Deterministic.
pub fn min_hitting_set(family: &[VertexSet]) -> Option<VertexSet> {
    if family.iter().any(|s| s.is_empty()) {
        return None;
    }
    let mut sets: Vec<VertexSet> = family.to_vec();
    sets.sort_by(VertexSet::canonical_cmp);
    sets.dedup();
    // Supersets of another member are hit whenever that member is.
    let sets: Vec<VertexSet> =
        sets.iter().filter(|s| !sets.iter().any(|o| o != *s && o.is_subset(**s))).copied().collect();

    let mut best = greedy(&sets);
    search(&sets, VertexSet::EMPTY, VertexSet::EMPTY, &mut best);
    Some(best)
}

fn greedy(sets: &[VertexSet]) -> VertexSet {
    let mut chosen = VertexSet::EMPTY;
    loop {
        let unhit: Vec<VertexSet> = sets.iter().filter(|s| !s.intersects(chosen)).copied().collect();
        if unhit.is_empty() {
            return chosen;
        }
        let universe = unhit.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
        let v = universe
            .iter()
            .max_by_key(|&v| (unhit.iter().filter(|s| s.contains(v)).count(), std::cmp::Reverse(v)))
            .expect("nonempty");
        chosen.insert(v);
    }
}

fn packing_bound(unhit: &[VertexSet]) -> usize {
    let mut used = VertexSet::EMPTY;
    let mut count = 0;
    for s in unhit {
        if !s.intersects(used) {
            used = used.union(*s);
            count += 1;
        }
    }
    count
}

fn search(sets: &[VertexSet], chosen: VertexSet, banned: VertexSet, best: &mut VertexSet) {
    let mut unhit = Vec::new();
    for s in sets.iter().filter(|s| !s.intersects(chosen)) {
        let open = s.difference(banned);
        if open.is_empty() {
            return;
        }
        unhit.push(open);
    }
    if unhit.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen;
        }
        return;
    }
    unhit.sort_by_key(|s| s.len());
    if chosen.len() + packing_bound(&unhit) >= best.len() {
        return;
    }
    // Branch on the least vertex of the solution inside the pivot: the
    // branch for `v` bans the pivot vertices tried before it.
    let mut banned = banned;
    for v in unhit[0] {
        search(sets, chosen.with(v), banned, best);
        banned.insert(v);
    }
}

/// Brute force over subsets of the union in increasing size. Test oracle
/// for [`min_hitting_set`]; exponential in the union size.
pub fn min_hitting_set_brute(family: &[VertexSet]) -> Option<VertexSet> {
    if family.iter().any(|s| s.is_empty()) {
        return None;
    }
    let universe = family.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
    (0..=universe.len())
        .find_map(|k| universe.subsets_of_size(k).into_iter().find(|x| family.iter().all(|s| s.intersects(*x))))
}
