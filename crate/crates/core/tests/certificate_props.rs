mod common;

use proptest::prelude::*;
use quadrep::arith::is_prime;
use quadrep::certificate::{self, Location, StepKind};
use quadrep::descent::{self, ResidueClass};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn one_nine_prime() -> impl Strategy<Value = u64> {
    (1u64..u64::MAX - 200_000).prop_filter_map("no prime", |s| {
        (s..s + 200_000).find(|&p| ResidueClass::of(p) == ResidueClass::OneNine && is_prime(p))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialization_round_trips(p in one_nine_prime()) {
        let (_, cert) = descent::represent_n5(p).unwrap();
        prop_assert!(common::round_trips(&cert));
    }

    #[test]
    fn single_token_mutations_are_rejected(p in one_nine_prime(), seed in any::<u64>()) {
        let (_, cert) = descent::represent_n5(p).unwrap();
        let text = certificate::serialize(&cert);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let mutated = common::mutate(&mut rng, &text);
            prop_assert!(common::rejected(&mutated), "accepted:\n{}", mutated);
        }
    }
}

#[test]
fn flipped_branch_names_the_step() {
    let (_, cert) = descent::represent_pair(3, 7).unwrap();
    let text = certificate::serialize(&cert);
    let flipped = if text.contains("branch=plus") {
        text.replacen("branch=plus", "branch=minus", 1)
    } else {
        text.replacen("branch=minus", "branch=plus", 1)
    };
    let err = certificate::verify(&certificate::deserialize(&flipped).unwrap()).unwrap_err();
    assert!(matches!(err.location, Location::Step(_, _)), "{err}");
}

#[test]
fn truncated_text_reports_a_line() {
    let (_, cert) = descent::represent_n5(1_000_000_009).unwrap();
    let text = certificate::serialize(&cert);
    let cut = &text[..text.rfind("FINAL").unwrap()];
    let err = certificate::deserialize(cut).unwrap_err();
    assert!(err.line >= 1, "{err}");
    assert!(certificate::deserialize("").is_err());
}

#[test]
fn every_step_kind_appears_in_some_certificate() {
    let prover = descent::shared();
    let mut seen = std::collections::HashSet::new();
    let mut add = |c: certificate::Certificate| {
        assert!(certificate::verify(&c).is_ok());
        seen.extend(c.steps.iter().map(|s| s.kind()));
    };
    for p in [41u64, 61, 181, 1_000_000_009, 2_147_483_629] {
        if ResidueClass::of(p) == ResidueClass::OneNine {
            add(prover.represent_n5(p).unwrap().1);
        }
    }
    for (q, q2) in [(3, 3), (7, 7), (2, 3), (3, 7), (23, 43), (47, 47)] {
        add(prover.represent_pair(q, q2).unwrap().1);
    }
    add(prover.certify_form(23).unwrap().1);
    add(prover.certify_fermat(1_000_000_009, 3).unwrap().1);
    let missing: Vec<StepKind> = StepKind::ALL
        .into_iter()
        .filter(|k| !seen.contains(k))
        .collect();
    assert!(missing.is_empty(), "never emitted: {missing:?}");
}
