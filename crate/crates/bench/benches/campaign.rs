use criterion::{criterion_group, criterion_main, Criterion};
use hhbounds_core::harness::IntervalSampler;
use hhbounds_core::{run_campaign, CampaignConfig};

fn config(claims: &[&str], functions: &[&str], count: usize) -> CampaignConfig {
    CampaignConfig {
        claims: claims.iter().map(|s| s.to_string()).collect(),
        functions: functions.iter().map(|s| s.to_string()).collect(),
        sampler: IntervalSampler {
            count,
            ..Default::default()
        },
        seed: 11,
        ..CampaignConfig::default()
    }
}

fn campaigns(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_campaign");
    group.sample_size(10);
    let cases = [
        (
            "thm5_poly",
            config(&["thm5"], &["poly2", "poly3", "poly4"], 4),
        ),
        ("thm6_derived_expx", config(&["thm6-derived"], &["expx"], 2)),
        (
            "props",
            config(
                &["prop1-stated", "prop2-stated", "prop3-stated"],
                &["poly3", "poly4"],
                4,
            ),
        ),
    ];
    for (name, cfg) in cases {
        group.bench_function(name, |b| b.iter(|| run_campaign(&cfg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, campaigns);
criterion_main!(benches);
