use crtfourier::crt::{mod_inverse, residues_of, CongruenceSystem, CrtBasis, UseKind};
use crtfourier::BigCongruenceSystem;
use crtfourier_oracles::{brute_force_crt, brute_force_inverse, gcd};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Random pairwise coprime moduli in `[2, max]`, with product at most `gamma_cap`.
fn random_moduli(rng: &mut StdRng, count: usize, max: u64, gamma_cap: u64) -> Vec<u64> {
    loop {
        let mut moduli: Vec<u64> = Vec::new();
        let mut product = 1u64;
        for _ in 0..200 {
            if moduli.len() == count {
                break;
            }
            let m = rng.gen_range(2..=max);
            if moduli.iter().all(|&o| gcd(o, m) == 1) && product * m <= gamma_cap {
                product *= m;
                moduli.push(m);
            }
        }
        if moduli.len() == count {
            return moduli;
        }
    }
}

#[test]
fn mod_inverse_matches_brute_force() {
    for m in 2i64..=60 {
        for a in -70i64..=70 {
            let oracle = brute_force_inverse(a.rem_euclid(m) as u64, m as u64);
            match (mod_inverse(&a, &m), oracle) {
                (Ok(v), Some(o)) => assert_eq!(v as u64, o, "a={a} m={m}"),
                (Err(_), None) => {}
                (got, want) => panic!("a={a} m={m}: {got:?} vs {want:?}"),
            }
        }
    }
}

#[test]
fn mod_inverse_random_coprime_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 10_000 {
        let m: i64 = rng.gen_range(2..1_000_000_007);
        let a: i64 = rng.gen_range(-1_000_000_000..1_000_000_000);
        if a.gcd(&m) != 1 {
            continue;
        }
        let v = mod_inverse(&BigInt::from(a), &BigInt::from(m)).unwrap();
        assert!(v >= BigInt::from(1) && v < BigInt::from(m));
        assert_eq!((v * a).mod_floor(&BigInt::from(m)), BigInt::from(1));
        checked += 1;
    }
}

#[test]
fn exhaustive_round_trip_small_gamma() {
    for moduli in [
        vec![3i64, 5, 7],
        vec![4, 9, 25],
        vec![2, 3],
        vec![8, 9, 5, 7],
        vec![97],
    ] {
        let basis = CrtBasis::new(moduli.clone()).unwrap();
        let gamma = *basis.gamma();
        assert!(gamma < 10_000);
        for n in 0..gamma {
            let res = residues_of(&n, &moduli).unwrap();
            let sys = CongruenceSystem::new(moduli.clone(), res).unwrap();
            assert_eq!(sys.solve().value, n);
        }
    }
}

#[test]
fn random_round_trip_large_gamma() {
    let mut rng = StdRng::seed_from_u64(11);
    // Mersenne-style primes and small coprimes: Γ well beyond u128
    let moduli: Vec<BigInt> = [
        "2305843009213693951",
        "618970019642690137449562111",
        "162259276829213363391578010288127",
        "1000000007",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    let basis = CrtBasis::new(moduli.clone()).unwrap();
    for _ in 0..200 {
        let digits: String = (0..80)
            .map(|_| char::from(b'0' + rng.gen_range(0..10u8)))
            .collect();
        let n = digits.parse::<BigInt>().unwrap().mod_floor(basis.gamma());
        let sys = BigCongruenceSystem::new(moduli.clone(), basis.residues_of(&n)).unwrap();
        let sol = sys.solve();
        assert_eq!(sol.value, n);
        let weights: BigInt = sol
            .unit_coeffs
            .iter()
            .zip(basis.cofactors())
            .map(|(u, c)| u * c)
            .sum();
        assert_eq!(weights, BigInt::from(1) + &sol.use_index * &sol.gamma);
    }
}

#[test]
fn solve_matches_linear_scan() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..300 {
        let count = rng.gen_range(2..=4);
        let moduli = random_moduli(&mut rng, count, 30, 20_000);
        let residues: Vec<u64> = moduli.iter().map(|&m| rng.gen_range(0..m)).collect();
        let want = brute_force_crt(&moduli, &residues).unwrap();
        let sys = CongruenceSystem::new(
            moduli.iter().map(|&m| m as i64).collect(),
            residues.iter().map(|&r| r as i64).collect(),
        )
        .unwrap();
        let sol = sys.solve();
        assert_eq!(sol.value as u64, want);
        for (u, m) in sol.unit_coeffs.iter().zip(sys.moduli()) {
            assert!(*u >= 1 && u < m);
        }
        assert!(sol.use_index >= 1);
        assert_ne!(sol.use_kind(), UseKind::Degenerate);
    }
}

fn coprime_moduli() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..60, 1..5).prop_filter_map("pairwise coprime", |mut v| {
        v.sort_unstable();
        v.dedup();
        let ok = v
            .iter()
            .enumerate()
            .all(|(i, a)| v[i + 1..].iter().all(|b| a.gcd(b) == 1));
        ok.then_some(v)
    })
}

proptest! {
    #[test]
    fn residues_are_a_ring_homomorphism(moduli in coprime_moduli(), a in 0i64..1 << 40, b in 0i64..1 << 40) {
        let basis = CrtBasis::new(moduli.clone()).unwrap();
        let gamma = *basis.gamma();
        let (a, b) = (a % gamma, b % gamma);
        let ra = basis.residues_of(&a);
        let rb = basis.residues_of(&b);
        let sum = basis.residues_of(&((a + b) % gamma));
        let prod = basis.residues_of(&((a * b) % gamma));
        for (j, m) in moduli.iter().enumerate() {
            prop_assert_eq!(sum[j], (ra[j] + rb[j]) % m);
            prop_assert_eq!(prod[j], (ra[j] * rb[j]) % m);
        }
    }

    #[test]
    fn use_identity_is_exact(moduli in coprime_moduli()) {
        let basis = CrtBasis::new(moduli.clone()).unwrap();
        let weights: i64 = basis.unit_coeffs().iter().zip(basis.cofactors()).map(|(u, c)| u * c).sum();
        let rel = basis.use_relation();
        prop_assert_eq!(weights - 1, rel.index * basis.gamma());
        prop_assert_eq!(rel.kind == UseKind::Degenerate, moduli.len() == 1);
    }

    #[test]
    fn reconstruct_inverts_residues(moduli in coprime_moduli(), n in 0i64..1 << 40) {
        let basis = CrtBasis::new(moduli).unwrap();
        let n = n % basis.gamma();
        prop_assert_eq!(basis.reconstruct(&basis.residues_of(&n)).unwrap(), n);
    }
}
