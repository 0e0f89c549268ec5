//! Lattice isomorphism and sublattice embedding.
//!
//! Both searches are deterministic: candidates are tried in ascending index
//! order, so the first witness found is stable across runs.

use crate::lattice::FiniteLattice;

/// Per-element invariant used to cut the isomorphism search space: any
/// order isomorphism must preserve all of these.
fn signature(l: &FiniteLattice, x: usize) -> (usize, usize, usize, usize, usize) {
    let down = l.down_set(x).len();
    let up = l.up_set(x).len();
    (
        l.height(x),
        l.lower_covers(x).len(),
        l.upper_covers(x).len(),
        down,
        up,
    )
}

/// Order-isomorphism test. Returns a mapping `map[a_index] = b_index` with
/// `x <= y` in `a` iff `map[x] <= map[y]` in `b`, or `None` if no such
/// bijection exists. The first mapping in lexicographic candidate order wins.
pub fn is_isomorphic(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let siga: Vec<_> = (0..n).map(|x| signature(a, x)).collect();
    let sigb: Vec<_> = (0..n).map(|x| signature(b, x)).collect();
    {
        let mut sa = siga.clone();
        let mut sb = sigb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return None;
        }
    }
    // Assign a-elements in order of rising candidate count.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| sigb.iter().filter(|&&s| s == siga[x]).count());
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &siga, &sigb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &FiniteLattice,
    b: &FiniteLattice,
    siga: &[(usize, usize, usize, usize, usize)],
    sigb: &[(usize, usize, usize, usize, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in 0..b.n() {
        if used[y] || sigb[y] != siga[x] {
            continue;
        }
        // Order-compatibility with everything already placed.
        let ok = order[..depth].iter().all(|&x2| {
            let y2 = map[x2];
            a.le(x, x2) == b.le(y, y2) && a.le(x2, x) == b.le(y2, y)
        });
        if !ok {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, siga, sigb, order, depth + 1, map, used) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

/// Searches `l` for a subset that is closed under the ambient meet and join
/// of `l` and order-isomorphic to `pattern`. With `require_top` the subset
/// must contain the top of `l`. Returns the subset as ascending ambient
/// indices. Cover relations inside the subset are irrelevant; only the
/// induced order matters.
pub fn find_sublattice_embedding(
    l: &FiniteLattice,
    pattern: &FiniteLattice,
    require_top: bool,
) -> Option<Vec<usize>> {
    let k = pattern.n();
    if k > l.n() {
        return None;
    }
    let mut subset = Vec::with_capacity(k);
    if require_top {
        // A subset containing the ambient top maps it to the pattern top in
        // any isomorphism, so pre-seed it and search only for the rest.
        subset.push(l.top());
    }
    if search_subset(l, pattern, &mut subset, 0, k) {
        subset.sort_unstable();
        Some(subset)
    } else {
        None
    }
}

fn search_subset(
    l: &FiniteLattice,
    pattern: &FiniteLattice,
    subset: &mut Vec<usize>,
    from: usize,
    k: usize,
) -> bool {
    if subset.len() == k {
        return is_closed(l, subset) && induced_matches(l, subset, pattern);
    }
    // Not enough elements left to fill the subset.
    let needed = k - subset.len();
    for x in from..l.n() {
        if l.n() - x < needed {
            break;
        }
        if subset.contains(&x) {
            continue;
        }
        subset.push(x);
        if search_subset(l, pattern, subset, x + 1, k) {
            return true;
        }
        subset.pop();
    }
    false
}

fn is_closed(l: &FiniteLattice, subset: &[usize]) -> bool {
    for (i, &x) in subset.iter().enumerate() {
        for &y in &subset[i + 1..] {
            if !subset.contains(&l.meet(x, y)) || !subset.contains(&l.join(x, y)) {
                return false;
            }
        }
    }
    true
}

fn induced_matches(l: &FiniteLattice, subset: &[usize], pattern: &FiniteLattice) -> bool {
    let labels: Vec<String> = subset.iter().map(|&x| x.to_string()).collect();
    let mut pairs = Vec::new();
    for (i, &x) in subset.iter().enumerate() {
        for (j, &y) in subset.iter().enumerate() {
            if i != j && l.lt(x, y) {
                pairs.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    match FiniteLattice::build_from_covers(&labels, &pairs) {
        Ok(induced) => is_isomorphic(&induced, pattern).is_some(),
        // A meet/join-closed subset always induces a lattice, but stay safe.
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FiniteLattice;

    #[test]
    fn chain_isomorphic_to_itself_only() {
        let c3 = FiniteLattice::chain(3);
        let c4 = FiniteLattice::chain(4);
        assert_eq!(is_isomorphic(&c3, &c3), Some(vec![0, 1, 2]));
        assert!(is_isomorphic(&c3, &c4).is_none());
    }

    #[test]
    fn product_of_chains_is_boolean_square() {
        let c2 = FiniteLattice::chain(2);
        let p = c2.direct_product(&c2);
        let b2 = FiniteLattice::boolean_lattice(2);
        assert!(is_isomorphic(&p, &b2).is_some());
        let c4 = FiniteLattice::chain(4);
        assert!(is_isomorphic(&p, &c4).is_none());
    }

    #[test]
    fn mapping_preserves_order_both_ways() {
        let b2 = FiniteLattice::boolean_lattice(2);
        let p = FiniteLattice::chain(2).direct_product(&FiniteLattice::chain(2));
        let map = is_isomorphic(&p, &b2).unwrap();
        for x in p.elements() {
            for y in p.elements() {
                assert_eq!(p.le(x, y), b2.le(map[x], map[y]));
            }
        }
    }

    #[test]
    fn chain_embeds_in_cube() {
        let c3 = FiniteLattice::chain(3);
        let b2 = FiniteLattice::boolean_lattice(2);
        let w = find_sublattice_embedding(&b2, &c3, false).unwrap();
        assert_eq!(w.len(), 3);
        for pair in w.windows(2) {
            assert!(b2.le(pair[0], pair[1]));
        }
        let c5 = FiniteLattice::chain(5);
        assert!(find_sublattice_embedding(&b2, &c5, false).is_none());
    }

    #[test]
    fn top_constrained_embedding() {
        // B2 sits through the top of C1 + B2 (ordinal sum), but a 2-chain
        // through the top must use the top itself.
        let b2 = FiniteLattice::boolean_lattice(2);
        let c2 = FiniteLattice::chain(2);
        let w = find_sublattice_embedding(&b2, &c2, true).unwrap();
        assert!(w.contains(&b2.top()));
    }
}
