mod common;

use commensurator::cli::{GAMMA_WORD, PSI_FREE_JSON, PSI_SURFACE_JSON, SURFACE_EXPECTED_OUTPUT};
use commensurator::comm::{build_bs_pair, decide_comm_word, sequential_evaluate, BsPair, CommWordProblemInstance};
use commensurator::{CommError, Commensurator, GroupPresentation, SubgroupIso};
use rand::Rng;

fn free_pair() -> (GroupPresentation, BsPair) {
    let f2 = GroupPresentation::free_rank2();
    let pair = build_bs_pair(&f2, 2, 3, Some(SubgroupIso::from_json(PSI_FREE_JSON).unwrap())).unwrap();
    (f2, pair)
}

fn surface_pair() -> (GroupPresentation, BsPair) {
    let g2 = GroupPresentation::genus2();
    let pair = build_bs_pair(&g2, 2, 3, Some(SubgroupIso::from_json(PSI_SURFACE_JSON).unwrap())).unwrap();
    (g2, pair)
}

#[test]
fn bs_relations_hold() {
    let f2 = GroupPresentation::free_rank2();
    for (m, n) in [(1, 2), (1, 3), (2, 3), (3, 2), (2, 5)] {
        let pair = build_bs_pair(&f2, m, n, None).unwrap();
        assert!(pair.relator().unwrap().is_identity(), "({m},{n})");
        let a = f2.parse("A").unwrap();
        let am = a.pow(m as i64);
        assert_eq!(pair.psi.evaluate(&am).unwrap(), a.pow(n as i64));
    }
    assert!(free_pair().1.relator().unwrap().is_identity());
    assert!(surface_pair().1.relator().unwrap().is_identity());
}

#[test]
fn mismatched_data_fails_the_relation() {
    // the (2,3) data does not send A^1 to A^2
    let f2 = GroupPresentation::free_rank2();
    let psi = SubgroupIso::from_json(PSI_FREE_JSON).unwrap();
    assert_eq!(build_bs_pair(&f2, 1, 2, Some(psi)).unwrap_err(), CommError::Relation { m: 1, n: 2 });
    assert_eq!(
        build_bs_pair(&GroupPresentation::genus2(), 2, 3, None).unwrap_err(),
        CommError::MissingIsoData
    );
}

#[test]
fn nontriviality_ladder() {
    for (_, pair) in [free_pair(), surface_pair()] {
        for t in 1..=5 {
            assert!(!pair.phi.power(t).unwrap().is_identity(), "phi^{t}");
        }
        assert!(pair.phi.power(0).unwrap().is_identity());
        assert!(!pair.psi.is_identity());
    }
}

#[test]
fn spec_examples() {
    let (f2, pair) = free_pair();
    let (psi, phi) = (&pair.psi, &pair.phi);
    assert!(phi.compose(&phi.inverse()).unwrap().is_identity());
    let lhs = psi.compose(&phi.power(2).unwrap().compose(&psi.inverse()).unwrap()).unwrap();
    assert!(lhs.equals(&phi.power(3).unwrap()).unwrap());
    let id = Commensurator::identity(&f2);
    assert!(id.compose(psi).unwrap().equals(psi).unwrap());
    assert!(psi.inverse().inverse().equals(psi).unwrap());
    let b = f2.parse("B").unwrap();
    assert_eq!(f2.format(&phi.power(3).unwrap().evaluate(&b).unwrap()), "A^3*B*A^-3");
}

#[test]
fn gamma_word_free() {
    let (f2, pair) = free_pair();
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).unwrap();
    let test = f2.parse("B*A*B^-1*A^-1").unwrap();
    let out = sequential_evaluate(&inst, &test).unwrap();
    assert_eq!(f2.format(&out), "A^3*B*A*B^-1*A^2");
    let v = decide_comm_word(&inst, &f2).unwrap();
    assert!(!v.trivial);
    assert_eq!(v.witness, Some((test, out)));

    let trivial = CommWordProblemInstance::parse(pair.letters(), "a a^-1").unwrap();
    assert!(decide_comm_word(&trivial, &f2).unwrap().trivial);
    let relation = CommWordProblemInstance::parse(pair.letters(), "a b^2 a^-1 b^-3").unwrap();
    assert!(decide_comm_word(&relation, &f2).unwrap().trivial);
    let empty = CommWordProblemInstance::parse(pair.letters(), "").unwrap();
    assert_eq!(sequential_evaluate(&empty, &f2.parse("A*B").unwrap()).unwrap(), f2.parse("A*B").unwrap());
}

#[test]
fn gamma_word_free_auto_psi() {
    let f2 = GroupPresentation::free_rank2();
    let pair = build_bs_pair(&f2, 2, 3, None).unwrap();
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).unwrap();
    let out = sequential_evaluate(&inst, &f2.parse("B*A*B^-1*A^-1").unwrap()).unwrap();
    let expected = common::fixture("free_oracle.json")["auto_word10"].as_str().unwrap().to_string();
    assert_eq!(out, f2.parse(&expected).unwrap());
    assert!(!decide_comm_word(&inst, &f2).unwrap().trivial);
}

#[test]
fn gamma_word_surface() {
    let (g2, pair) = surface_pair();
    let inst = CommWordProblemInstance::parse(pair.letters(), GAMMA_WORD).unwrap();
    let c = g2.parse("C").unwrap();
    let out = sequential_evaluate(&inst, &c).unwrap();
    assert!(g2.words_equal(&out, &g2.parse(SURFACE_EXPECTED_OUTPUT).unwrap()));
    assert!(!g2.is_trivial(&out.concat(&c.inverse())));
}

/// Composite and stepwise evaluation agree on the composite's domain.
#[test]
fn evaluation_strategies_agree() {
    let mut rng = common::rng(51);
    for (group, pair) in [free_pair(), surface_pair()] {
        for word in [GAMMA_WORD, "a b^2 a^-1", "b a^-1 b"] {
            let inst = CommWordProblemInstance::parse(pair.letters(), word).unwrap();
            let product = inst.product(&group).unwrap();
            for _ in 0..20 {
                let w = common::random_member(&mut rng, product.rep().domain(), 8);
                let a = sequential_evaluate(&inst, &w).unwrap();
                let b = product.evaluate(&w).unwrap();
                assert!(group.words_equal(&a, &b), "{word}");
            }
        }
    }
}

fn random_product(rng: &mut rand::rngs::StdRng, letters: &[Commensurator], len: usize) -> Commensurator {
    let mut acc = Commensurator::identity(letters[0].group());
    for _ in 0..len {
        let c = &letters[rng.gen_range(0..letters.len())];
        let c = if rng.gen_bool(0.5) { c.inverse() } else { c.clone() };
        acc = acc.compose(&c).unwrap();
    }
    acc
}

#[test]
fn group_laws_at_class_level() {
    let mut rng = common::rng(52);
    let (_, pair) = free_pair();
    let letters = [pair.psi.clone(), pair.phi.clone()];
    for _ in 0..10 {
        let x = random_product(&mut rng, &letters, 2);
        let y = random_product(&mut rng, &letters, 2);
        let z = random_product(&mut rng, &letters, 2);
        assert!(x.compose(&x.inverse()).unwrap().is_identity());
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        assert!(left.equals(&right).unwrap());
    }
}

/// Restricting every letter to a smaller subgroup first does not change
/// verdicts.
#[test]
fn representative_independence() {
    let mut rng = common::rng(53);
    for (group, pair) in [free_pair(), surface_pair()] {
        let words = if group.is_free() {
            vec![GAMMA_WORD, "a b^2 a^-1 b^-3", "a b a^-1 b^-1", "b^3 a b^-3 a^-1", "a a^-1 b"]
        } else {
            vec!["a b^2 a^-1 b^-3", "a b a^-1 b^-1", "b^2 a^-1"]
        };
        for word in words {
            let plain = CommWordProblemInstance::parse(pair.letters(), word).unwrap();
            let expected = decide_comm_word(&plain, &group).unwrap().trivial;
            for _ in 0..2 {
                let mut images = vec![vec![rng.gen_range(0..2), rng.gen_range(0..2)], vec![1, rng.gen_range(0..2)]];
                images.resize(group.rank(), vec![rng.gen_range(0..2), 0]);
                let small = commensurator::CosetTable::kernel(
                    &group,
                    &commensurator::FiniteAbelianTarget::new(vec![2, 2], images).unwrap(),
                )
                .unwrap();
                let restricted: Vec<(String, Commensurator)> = pair
                    .letters()
                    .into_iter()
                    .map(|(n, c)| (n, c.restrict(&small).unwrap()))
                    .collect();
                let inst = CommWordProblemInstance::parse(restricted, word).unwrap();
                assert_eq!(decide_comm_word(&inst, &group).unwrap().trivial, expected, "{word}");
            }
        }
    }
}

#[test]
fn bs_1_2_sanity() {
    let f2 = GroupPresentation::free_rank2();
    let pair = build_bs_pair(&f2, 1, 2, None).unwrap();
    let lhs = pair.psi.compose(&pair.phi.compose(&pair.psi.inverse()).unwrap()).unwrap();
    assert!(lhs.equals(&pair.phi.power(2).unwrap()).unwrap());
    assert_eq!(f2.format(&pair.psi.evaluate(&f2.parse("A").unwrap()).unwrap()), "A^2");
}

#[test]
fn domain_errors_name_the_step() {
    let (f2, pair) = free_pair();
    let inst = CommWordProblemInstance::parse(pair.letters(), "b a").unwrap();
    let err = sequential_evaluate(&inst, &f2.parse("A").unwrap()).unwrap_err();
    assert_eq!(err, CommError::Domain { step: 1, letter: "a".into() });
}
