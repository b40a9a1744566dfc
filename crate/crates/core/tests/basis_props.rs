use nlie::basis::{
    binomial, enumerate_cochain_keys, increasing_tuples, normalize_wedge, permutation_sign, shuffle_sign,
    CochainSpace,
};
use nlie::cohomology::restricted_key_count;
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Parity from the cycle decomposition of `perm` (a permutation of `0..len`).
fn cycle_parity(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut even_cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        even_cycles += usize::from(len % 2 == 0);
    }
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Ranks of `seq` among its sorted values.
fn ranks(seq: &[usize]) -> Vec<usize> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    seq.iter().map(|x| sorted.binary_search(x).unwrap()).collect()
}

fn distinct_tuple() -> impl Strategy<Value = Vec<usize>> {
    (1usize..7).prop_flat_map(|k| subsequence((0..10).collect::<Vec<_>>(), k).prop_shuffle())
}

proptest! {
    #[test]
    fn normalize_is_identity_on_sorted(t in (1usize..6).prop_flat_map(|k| subsequence((0..9).collect::<Vec<_>>(), k))) {
        let s = normalize_wedge(&t, 9).unwrap();
        prop_assert_eq!(s.sign, 1);
        let w = s.word.unwrap();
        prop_assert_eq!(w.indices(), &t[..]);
    }

    #[test]
    fn normalize_sign_is_permutation_parity(t in distinct_tuple(), seed in any::<u64>()) {
        let base = normalize_wedge(&t, 10).unwrap();
        prop_assert_eq!(base.sign, cycle_parity(&ranks(&t)));
        // apply a further permutation σ and compare parities
        let mut sigma: Vec<usize> = (0..t.len()).collect();
        let mut s = seed;
        for i in (1..sigma.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            sigma.swap(i, (s >> 33) as usize % (i + 1));
        }
        let permuted: Vec<usize> = sigma.iter().map(|&i| t[i]).collect();
        let after = normalize_wedge(&permuted, 10).unwrap();
        prop_assert_eq!(after.word, base.word);
        prop_assert_eq!(after.sign, cycle_parity(&sigma) * base.sign);
    }

    #[test]
    fn repeated_index_gives_zero(t in distinct_tuple(), pos in any::<prop::sample::Index>()) {
        let mut t = t;
        let i = pos.index(t.len());
        t.push(t[i]);
        let s = normalize_wedge(&t, 10).unwrap();
        prop_assert_eq!(s.sign, 0);
        prop_assert!(s.word.is_none());
        prop_assert_eq!(permutation_sign(&t), 0);
    }

    #[test]
    fn shuffle_sign_matches_parity_oracle(size in 1usize..=7, mask in any::<u8>()) {
        let j: Vec<usize> = (1..=size).filter(|x| mask >> (x - 1) & 1 == 1).collect();
        prop_assume!(!j.is_empty());
        let split = shuffle_sign(&j, size).unwrap();
        let i: Vec<usize> = (1..=size).filter(|x| !j.contains(x)).collect();
        prop_assert_eq!(&split.i, &i);
        let perm: Vec<usize> = j.iter().chain(&i).map(|x| x - 1).collect();
        prop_assert_eq!(split.sign, cycle_parity(&perm));
        prop_assert_eq!(split.k, i.iter().filter(|&&x| x < *j.last().unwrap()).count());
        // composing with the sort of I (already sorted) leaves the total parity unchanged
        let full: Vec<usize> = j.iter().chain(&i).copied().collect();
        prop_assert_eq!(split.sign * permutation_sign(&i), permutation_sign(&full));
    }

    #[test]
    fn encode_decode_round_trip(dim in 2usize..7, arity in 2usize..4, p in 0usize..4, seed in any::<u64>()) {
        prop_assume!(arity - 1 <= dim);
        let space = CochainSpace::new(dim, arity).unwrap();
        let count = space.key_count(p);
        let code = seed % count;
        let key = space.key_of(code, p);
        prop_assert_eq!(space.code_of(&key).unwrap(), code);
        let (blocks, tail) = space.decode(code, p);
        prop_assert_eq!(space.encode(&blocks, tail), code);
    }
}

#[test]
fn key_counts_exhaustive() {
    for w in 1..=8 {
        for n in 2..=4 {
            for p in 0..=3 {
                let keys = enumerate_cochain_keys(w, n, p).unwrap();
                assert_eq!(keys.len(), binomial(w, n - 1).pow(p as u32) * w, "w={w} n={n} p={p}");
                assert!(keys.windows(2).all(|k| k[0] < k[1]), "lexicographic order w={w} n={n} p={p}");
                if w <= 6 && n - 1 <= w {
                    assert_eq!(CochainSpace::new(w, n).unwrap().key_count(p), keys.len() as u64);
                }
            }
        }
    }
}

#[test]
fn restricted_counts_match_enumeration() {
    for m in 1..=4 {
        for d in 1..=3 {
            for n in 2..=3 {
                for p in 0..=2 {
                    let keys = enumerate_cochain_keys(m + d, n, p).unwrap();
                    let with_g = keys
                        .iter()
                        .filter(|k| k.tail < m || k.blocks.iter().any(|b| b.indices()[0] < m))
                        .count() as u64;
                    assert_eq!(restricted_key_count(m, d, n, p), with_g, "m={m} d={d} n={n} p={p}");
                }
            }
        }
    }
}

#[test]
fn increasing_tuples_are_sorted_and_complete() {
    for dim in 0..7 {
        for k in 0..=dim {
            let t = increasing_tuples(dim, k);
            assert_eq!(t.len(), binomial(dim, k));
            assert!(t.iter().all(|x| x.windows(2).all(|w| w[0] < w[1])));
            assert!(t.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn out_of_range_is_rejected() {
    assert!(normalize_wedge(&[0, 5], 5).is_err());
    assert!(shuffle_sign(&[], 3).is_err());
    assert!(shuffle_sign(&[2, 1], 3).is_err());
    assert!(shuffle_sign(&[4], 3).is_err());
    assert!(enumerate_cochain_keys(0, 3, 1).is_err());
    assert!(enumerate_cochain_keys(3, 1, 1).is_err());
}
