use num_bigint::BigUint;
use proptest::prelude::*;

use jhankel::automaton::{kernel_dfao, Dfao};
use jhankel::closed_form::Column;
use jhankel::hankel::HankelSpec;
use jhankel::parse::parse_index;
use jhankel::{DetKey, EisensteinInt, Evaluator, Family, Oracle, SequenceKind, UnitOrZero};

fn arb_family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::H), Just(Family::Sigma)]
}

proptest! {
    #[test]
    fn fast_matches_oracle(family in arb_family(), n in 0usize..40, p in 0u64..200) {
        let fast = Evaluator::new().eval(&DetKey::new(family, n, p));
        let brute = Oracle::default()
            .determinant(&HankelSpec { family, p: BigUint::from(p), n })
            .unwrap();
        prop_assert_eq!(fast.to_eisenstein(), brute);
    }

    #[test]
    fn column_recurrences_match_general_evaluator(n in any::<u64>()) {
        let ev = Evaluator::new();
        for column in Column::ALL {
            let key = DetKey::new(column.family(), n, column.p());
            prop_assert_eq!(column.value_u64(n), ev.eval(&key));
        }
    }

    #[test]
    fn huge_indices_are_deterministic(digits in "[1-9][0-9]{0,60}", p in "[0-9]{1,12}") {
        let n = parse_index(&digits).unwrap();
        let p = parse_index(&p).unwrap();
        let key = DetKey::new(Family::Sigma, n, p);
        prop_assert_eq!(Evaluator::new().eval(&key), Evaluator::new().eval(&key));
    }

    #[test]
    fn c_is_supported_on_digits_zero_and_one(n in any::<u64>()) {
        let v = SequenceKind::C.term_u64(n);
        let mut digits = Vec::new();
        let mut m = n;
        while m > 0 {
            digits.push(m % 3);
            m /= 3;
        }
        if digits.contains(&2) {
            prop_assert_eq!(v, UnitOrZero::ZERO);
        } else {
            let ones = digits.iter().filter(|&&d| d == 1).count() as i64;
            prop_assert_eq!(v, UnitOrZero::j_pow(ones));
        }
    }

    #[test]
    fn s_is_sum_of_neighbours(n in 0u64..u64::MAX - 1) {
        let sum = SequenceKind::C.term_u64(n).to_eisenstein() + SequenceKind::C.term_u64(n + 1).to_eisenstein();
        prop_assert_eq!(SequenceKind::S.term_u64(n).to_eisenstein(), sum);
    }

    #[test]
    fn big_and_small_paths_agree(n in any::<u64>()) {
        for kind in [SequenceKind::C, SequenceKind::S] {
            prop_assert_eq!(kind.term(&BigUint::from(n)), kind.term_u64(n));
        }
    }

    #[test]
    fn eisenstein_text_round_trip(a in -10_000i64..10_000, b in -10_000i64..10_000) {
        let x = EisensteinInt::new(a, b);
        prop_assert_eq!(x.to_string().parse::<EisensteinInt>().unwrap(), x);
    }
}

#[test]
fn wire_tokens_round_trip() {
    for u in UnitOrZero::ALL {
        assert_eq!(u.as_str().parse::<UnitOrZero>().unwrap(), u);
        assert_eq!(
            serde_json::to_string(&u).unwrap(),
            format!("\"{}\"", u.as_str())
        );
    }
    let tokens: Vec<&str> = UnitOrZero::ALL.iter().map(|u| u.as_str()).collect();
    assert_eq!(tokens, ["0", "1", "-1", "J", "-J", "J^2", "-J^2"]);
}

#[test]
fn dfao_json_schema() {
    for column in Column::ALL {
        let dfao = kernel_dfao(column, 729).unwrap();
        let json: serde_json::Value = serde_json::from_str(&dfao.to_json()).unwrap();
        let obj = json.as_object().unwrap();
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(keys, ["digit_order", "initial", "states", "transitions"]);
        assert_eq!(json["digit_order"], "lsd");
        let states = json["states"].as_array().unwrap();
        let transitions = json["transitions"].as_array().unwrap();
        assert_eq!(states.len(), transitions.len());
        for s in states {
            let token = s["output"].as_str().unwrap();
            assert!(token.parse::<UnitOrZero>().is_ok());
        }
        for t in transitions {
            let row = t.as_array().unwrap();
            assert_eq!(row.len(), 3);
            assert!(row
                .iter()
                .all(|x| (x.as_u64().unwrap() as usize) < states.len()));
        }
        assert_eq!(Dfao::from_json(&dfao.to_json_pretty()).unwrap(), dfao);
    }
}

#[test]
fn dfao_runs_beyond_replay_window() {
    let dfao = kernel_dfao(Column::Sigma0, 729).unwrap();
    for n in [3u64.pow(10), 3u64.pow(10) + 1, 123_456_789, u64::MAX / 7] {
        assert_eq!(dfao.run_u64(n), Column::Sigma0.value_u64(n));
    }
    let huge = parse_index("3^100").unwrap() + 5u32;
    assert_eq!(dfao.run(&huge), Column::Sigma0.value(&huge));
}
