//! Independent brute-force oracles.
//!
//! These deliberately avoid the closed-form statistics: lengths are measured
//! by breadth-first search over the Cayley graph, using nothing but group
//! composition. The verification suites compare these distances against the
//! formula-based lengths.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::perm::SignedPermutation;

/// Distance of every element reachable from the identity by right
/// multiplication with the given generators.
pub fn bfs_lengths(
    m: usize,
    generators: &[SignedPermutation],
) -> HashMap<SignedPermutation, u64> {
    let identity = SignedPermutation::identity(m).expect("degree >= 1");
    let mut dist = HashMap::new();
    dist.insert(identity.clone(), 0u64);
    let mut queue = VecDeque::new();
    queue.push_back(identity);
    while let Some(at) = queue.pop_front() {
        let d = dist[&at];
        for g in generators {
            let next = at.compose(g);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

/// Coxeter generators `s_0, ..., s_{m-1}` of `B_m`.
pub fn b_generators(m: usize) -> Vec<SignedPermutation> {
    (0..m)
        .map(|i| SignedPermutation::s_gen(m, i).expect("index in range"))
        .collect()
}

/// Coxeter generators of `D_m`: `s_0 s_1 s_0 = [-2,-1,3,...,m]` together
/// with `s_1, ..., s_{m-1}`.
pub fn d_generators(m: usize) -> Vec<SignedPermutation> {
    let s0 = SignedPermutation::s_gen(m, 0).expect("index in range");
    let s1 = SignedPermutation::s_gen(m, 1).expect("index in range");
    let mut gens = vec![s0.compose(&s1).compose(&s0)];
    for i in 1..m {
        gens.push(SignedPermutation::s_gen(m, i).expect("index in range"));
    }
    gens
}

/// The generators `a_0, a_1, a_1^{-1}, a_2, ..., a_{m-2}` of the signed
/// even permutations.
pub fn l_generators(m: usize) -> Vec<SignedPermutation> {
    let mut gens = vec![SignedPermutation::a_gen(m, 0).expect("index in range")];
    if m >= 3 {
        gens.push(SignedPermutation::a_gen(m, 1).expect("index in range"));
        gens.push(SignedPermutation::a1_inv(m).expect("degree >= 3"));
        for i in 2..=m - 2 {
            gens.push(SignedPermutation::a_gen(m, i).expect("index in range"));
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Group;

    #[test]
    fn bfs_reaches_whole_groups() {
        let b3 = bfs_lengths(3, &b_generators(3));
        assert_eq!(b3.len() as u128, Group::B.order(3).unwrap());
        let d3 = bfs_lengths(3, &d_generators(3));
        assert_eq!(d3.len() as u128, Group::D.order(3).unwrap());
        let l4 = bfs_lengths(4, &l_generators(4));
        assert_eq!(l4.len() as u128, Group::L.order(4).unwrap());
    }

    #[test]
    fn d_distance_of_the_double_sign_change() {
        let d3 = bfs_lengths(3, &d_generators(3));
        let target: SignedPermutation = "-1,-2,3".parse().unwrap();
        assert_eq!(d3[&target], 2);
    }
}
