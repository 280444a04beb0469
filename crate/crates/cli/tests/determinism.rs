//! Repeated invocations produce byte-identical output.

use proptest::prelude::*;
use ss2cat_cli::run;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn command() -> impl Strategy<Value = Vec<String>> {
    let fmt = prop_oneof![Just("json"), Just("md")];
    let cyclic = prop::collection::vec(2u64..=4, 0..=2);
    prop_oneof![
        (cyclic.clone(), fmt.clone()).prop_map(|(g, f)| {
            let g: Vec<String> = g.iter().map(u64::to_string).collect();
            vec!["pointed".into(), "classes".into(), "--group".into(), g.join(","), "--format".into(), f.into()]
        }),
        (1u64..200, fmt.clone()).prop_map(|(b, f)| {
            vec!["pointed".into(), "squareclasses".into(), "--bound".into(), b.to_string(), "--format".into(), f.into()]
        }),
        (prop::sample::select(vec![2u64, 3]), 0u64..3, fmt.clone()).prop_map(|(p, z, f)| {
            vec!["fusion2".into(), "pointed".into(), "--p".into(), p.to_string(), "--zeta".into(), (z % p).to_string(), "--format".into(), f.into()]
        }),
        (prop::sample::select(vec![2u64, 3]), 1u32..5, 1u32..5).prop_map(|(p, q, r)| {
            vec!["fusion2".into(), "ffield".into(), p.to_string(), q.to_string(), r.to_string()]
        }),
        (prop::sample::select(vec!["zmod2.ring.json", "fib.ring.json", "z3.ring.json", "bad_unit.ring.json"]), fmt.clone())
            .prop_map(|(file, f)| vec!["ring".into(), "validate".into(), data(file), "--format".into(), f.into()]),
        (prop::sample::select(vec!["2", "3", "2,2"]), prop::sample::select(vec!["q", "fp2", "fp3"]), 1usize..4)
            .prop_map(|(g, c, n)| vec!["dy".into(), "dims".into(), "--group".into(), g.into(), "--coeff".into(), c.into(), "--nmax".into(), n.to_string()]),
        (1u32..9).prop_map(|d| vec!["twocat".into(), "family".into(), "--p".into(), "2".into(), "--depth".into(), d.to_string()]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn two_runs_are_byte_identical(args in command()) {
        let argv: Vec<String> = std::iter::once("ss2cat".to_string()).chain(args).collect();
        let a = run(argv.clone());
        let b = run(argv);
        prop_assert_eq!(a, b);
    }
}
