//! Independent reference routines used by the integration tests. They
//! share no code with the library paths they check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

/// Masks with at least two bits over `n` rings.
pub fn all_monomials(n: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() >= 2).collect()
}

/// Union-find connectivity: do `edges` cover `vars` and join it into one
/// component?
pub fn joins(edges: &[u32], vars: u32) -> bool {
    let mut parent: Vec<usize> = (0..32).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut covered = 0u32;
    for &e in edges {
        covered |= e;
        let bits: Vec<usize> = (0..32).filter(|i| e >> i & 1 == 1).collect();
        for w in bits.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    if covered & vars != vars || vars == 0 {
        return false;
    }
    let members: Vec<usize> = (0..32).filter(|i| vars >> i & 1 == 1).collect();
    let root = find(&mut parent, members[0]);
    members.iter().all(|&m| find(&mut parent, m) == root)
}

pub fn redundant(m: u32, set: &[u32]) -> bool {
    let subs: Vec<u32> = set
        .iter()
        .copied()
        .filter(|&s| s != m && s & !m == 0)
        .collect();
    joins(&subs, m)
}

/// Every fixed point reachable by removing redundant monomials one at a
/// time, in any order.
pub fn all_reductions(set: &[u32]) -> BTreeSet<Vec<u32>> {
    fn go(set: Vec<u32>, memo: &mut HashMap<Vec<u32>, BTreeSet<Vec<u32>>>) -> BTreeSet<Vec<u32>> {
        if let Some(r) = memo.get(&set) {
            return r.clone();
        }
        let removable: Vec<usize> = (0..set.len()).filter(|&i| redundant(set[i], &set)).collect();
        let mut out = BTreeSet::new();
        if removable.is_empty() {
            out.insert(set.clone());
        }
        for i in removable {
            let mut next = set.clone();
            next.remove(i);
            out.extend(go(next, memo));
        }
        memo.insert(set, out.clone());
        out
    }
    let mut start = set.to_vec();
    start.sort_unstable();
    start.dedup();
    go(start, &mut HashMap::new())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn apply(perm: &[usize], set: &[u32]) -> Vec<u32> {
    let mut out: Vec<u32> = set
        .iter()
        .map(|&m| (0..perm.len()).filter(|i| m >> i & 1 == 1).fold(0, |acc, i| acc | 1 << perm[i]))
        .collect();
    out.sort_unstable();
    out
}

/// Smallest sorted mask list over all relabelings.
pub fn canonical(set: &[u32], n: usize) -> Vec<u32> {
    permutations(n)
        .iter()
        .map(|p| apply(p, set))
        .min()
        .unwrap_or_default()
}

/// Isomorphism classes of reduced connected links on exactly `n` rings,
/// by exhaustive search over monomial subsets.
pub fn brute_force_classes(n: usize) -> BTreeSet<Vec<u32>> {
    let monos = all_monomials(n);
    let all = (1u32 << n) - 1;
    let mut out = BTreeSet::new();
    for pick in 1u64..1 << monos.len() {
        let set: Vec<u32> = (0..monos.len())
            .filter(|i| pick >> i & 1 == 1)
            .map(|i| monos[i])
            .collect();
        if !joins(&set, all) || set.iter().any(|&m| redundant(m, &set)) {
            continue;
        }
        out.insert(canonical(&set, n));
    }
    out
}

/// Projector-sum from kets given as bit strings with real weights:
/// each item is a list of basis strings forming one unnormalized vector.
pub fn ket_sum_projectors(n: usize, items: &[(f64, &[&str])]) -> Vec<Vec<f64>> {
    let d = 1 << n;
    let mut m = vec![vec![0.0; d]; d];
    for &(w, kets) in items {
        let mut v = vec![0.0; d];
        for k in kets {
            v[usize::from_str_radix(k, 2).unwrap()] += 1.0;
        }
        for i in 0..d {
            for j in 0..d {
                m[i][j] += w * v[i] * v[j];
            }
        }
    }
    let tr: f64 = (0..d).map(|i| m[i][i]).sum();
    for row in &mut m {
        for x in row.iter_mut() {
            *x /= tr;
        }
    }
    m
}
