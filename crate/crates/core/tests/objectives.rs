use ifdo_core::objectives::{catalog, cec_catalog, cec_evaluate, resolve, CecFn};
use ifdo_core::{ObjectiveId, ObjectiveSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample(spec: &ObjectiveSpec, rng: &mut ChaCha8Rng) -> Vec<f64> {
    spec.bounds
        .lower()
        .iter()
        .zip(spec.bounds.upper())
        .map(|(&l, &h)| rng.random_range(l..=h))
        .collect()
}

#[test]
fn composites_finite_over_a_million_points() {
    let mut noise = ChaCha8Rng::seed_from_u64(0);
    for n in 14..=19u8 {
        let spec = resolve(&ObjectiveId::Tf(n)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        let mut x = vec![0.0; 10];
        for _ in 0..1_000_000 {
            x.iter_mut().for_each(|v| *v = rng.random_range(-5.0..=5.0));
            let f = spec.evaluate(&x, &mut noise).unwrap();
            assert!(f.is_finite(), "TF{n} at {x:?} -> {f}");
        }
    }
}

#[test]
fn cec_never_below_floor() {
    for f in CecFn::ALL.into_iter().skip(3) {
        let spec = resolve(&ObjectiveId::Cec(f.number())).unwrap();
        let floor = f.floor();
        let mut rng = ChaCha8Rng::seed_from_u64(f.number() as u64);
        for _ in 0..100_000 {
            let x = sample(&spec, &mut rng);
            let v = cec_evaluate(f, &x).unwrap();
            assert!(v >= floor, "CEC{:02}: {v} below floor {floor}", f.number());
        }
    }
}

#[test]
fn cec_floors_are_local_minima() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for f in CecFn::ALL {
        let x0 = f.minimizer();
        let floor = f.floor();
        for _ in 0..200 {
            let x: Vec<f64> = x0
                .iter()
                .map(|v| v + rng.random_range(-1e-3..1e-3))
                .collect();
            assert!(
                f.eval(&x) >= floor - 1e-9,
                "CEC{:02} dips below its floor",
                f.number()
            );
        }
    }
}

#[test]
fn evaluators_are_pure() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let apps = [
        resolve(&ObjectiveId::Antenna).unwrap(),
        resolve(&ObjectiveId::Evac).unwrap(),
    ];
    for spec in catalog()
        .iter()
        .chain(cec_catalog().iter())
        .chain(apps.iter())
    {
        let x = sample(spec, &mut rng);
        let a = spec
            .evaluate(&x, &mut ChaCha8Rng::seed_from_u64(1))
            .unwrap();
        let b = spec
            .evaluate(&x, &mut ChaCha8Rng::seed_from_u64(1))
            .unwrap();
        assert_eq!(a.to_bits(), b.to_bits(), "{}", spec.id);
        if !spec.is_noisy() {
            let c = spec
                .evaluate(&x, &mut ChaCha8Rng::seed_from_u64(2))
                .unwrap();
            assert_eq!(a.to_bits(), c.to_bits(), "{}", spec.id);
        }
    }
}

#[test]
fn dimension_gate_everywhere() {
    let mut noise = ChaCha8Rng::seed_from_u64(0);
    for spec in catalog().iter().chain(cec_catalog().iter()) {
        let d = spec.dimension();
        assert!(spec.evaluate(&vec![0.0; d + 1], &mut noise).is_err());
        assert!(spec.evaluate(&vec![0.0; d - 1], &mut noise).is_err());
    }
    for f in CecFn::ALL {
        assert!(cec_evaluate(f, &[0.0; 3]).is_err());
    }
}

#[test]
fn evaluators_are_thread_safe() {
    let specs: Vec<ObjectiveSpec> = catalog().into_iter().chain(cec_catalog()).collect();
    let expected: Vec<f64> = specs
        .iter()
        .map(|s| {
            s.evaluate(&s.shift, &mut ChaCha8Rng::seed_from_u64(4))
                .unwrap()
        })
        .collect();
    std::thread::scope(|scope| {
        for _ in 0..4 {
            scope.spawn(|| {
                for (s, want) in specs.iter().zip(&expected) {
                    let got = s
                        .evaluate(&s.shift, &mut ChaCha8Rng::seed_from_u64(4))
                        .unwrap();
                    assert_eq!(got.to_bits(), want.to_bits());
                }
            });
        }
    });
}
