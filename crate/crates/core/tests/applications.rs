use ifdo_core::applications::antenna::is_feasible;
use ifdo_core::applications::{
    antenna_fitness, build_scenario, constraint_violation, evac_fitness, AntennaProblem,
    EvacScenario, TimeFormula,
};

#[test]
fn scenario_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scenario.txt");
    let original = build_scenario(30.0, 20.0, 25, 3).unwrap();
    original.write(&path).unwrap();
    let back = EvacScenario::read(&path, TimeFormula::default()).unwrap();
    assert_eq!(back, original);
    for s in [0.0, 12.5, 49.9, 77.0] {
        assert_eq!(
            evac_fitness(s, &back).to_bits(),
            evac_fitness(s, &original).to_bits()
        );
    }
}

#[test]
fn scenario_file_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "area 10 10\n1 1 1.0\n2 x 1.0\n").unwrap();
    let err = EvacScenario::read(&path, TimeFormula::default())
        .unwrap_err()
        .to_string();
    assert!(err.contains("bad.txt") && err.contains('3'), "{err}");
}

#[test]
fn printed_layouts() {
    let p = AntennaProblem::default();
    let fdo = [0.713, 1.595, 0.433, 0.130];
    assert!(is_feasible(&fdo, &p));
    assert!(antenna_fitness(&fdo, &p) < 1e3);
    let ifdo = [0.701, 1.552, 0.402, 0.103];
    assert!(!is_feasible(&ifdo, &p));
    let v = constraint_violation(&ifdo, &p);
    assert!((antenna_fitness(&ifdo, &p) - (1e6 * v + 1e3)).abs() < 1e-6);
}
