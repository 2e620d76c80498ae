use hqm::suite::{run, Suite, VerifyConfig};
use hqm::Exec;

fn small(exec: Exec, seed: u64) -> VerifyConfig {
    VerifyConfig {
        seed,
        grid: 64,
        theta_nodes: 16,
        phi_nodes: 32,
        cube: 12,
        rk4_steps: 2000,
        rk4_order_steps: 64,
        algebra_samples: 500,
        spin_samples: 100,
        eta_samples: 4,
        ell_max: 2,
        exec,
        ..VerifyConfig::default()
    }
}

#[test]
fn same_seed_same_report() {
    let a = run(Suite::All, &small(Exec::Sequential, 7)).unwrap();
    let b = run(Suite::All, &small(Exec::Sequential, 7)).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
}

#[test]
fn parallel_matches_sequential() {
    let seq = run(Suite::All, &small(Exec::Sequential, 11)).unwrap();
    let par = run(Suite::All, &small(Exec::Parallel, 11)).unwrap();
    assert_eq!(seq.to_json(), par.to_json());
}

#[test]
fn single_suite_is_a_subset_of_all() {
    let cfg = small(Exec::Sequential, 3);
    let all = run(Suite::All, &cfg).unwrap();
    let spin = run("spin".parse().unwrap(), &cfg).unwrap();
    assert!(!spin.checks.is_empty());
    for c in &spin.checks {
        assert!(c.name.starts_with("spin."));
        let same = all.checks.iter().find(|d| d.name == c.name).unwrap();
        assert_eq!(same.residual.to_bits(), c.residual.to_bits());
    }
}
