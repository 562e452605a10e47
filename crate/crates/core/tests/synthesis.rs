use stepcomp::competition::{ij_compete, is_competitive, Competitiveness, StepPair};
use stepcomp::synthesis::{construct, decide, grow, seed, Clause, Construction, SeedId, Verdict};
use stepcomp::PartitionSpec;

fn s(i: usize, j: usize) -> StepPair {
    StepPair::new(i, j).unwrap()
}

fn p(sizes: &[usize]) -> PartitionSpec {
    PartitionSpec::new(sizes.to_vec()).unwrap()
}

fn competitive(id: SeedId, i: usize, j: usize) -> bool {
    is_competitive(seed(id).unwrap().digraph(), s(i, j)).unwrap().is_competitive()
}

/// Every partition into at least two parts with at most `max_n` vertices
/// and at most `max_parts` parts, sizes non-increasing.
fn partitions(max_n: usize, max_parts: usize, max_size: usize) -> Vec<PartitionSpec> {
    fn rec(rest: usize, cap: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        if cur.len() == parts {
            return;
        }
        for size in (1..=cap.min(rest)).rev() {
            cur.push(size);
            rec(rest - size, size, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_n, max_size, max_parts, &mut Vec::new(), &mut out);
    out.into_iter().map(|v| PartitionSpec::new(v).unwrap()).collect()
}

#[test]
fn seeds_are_competitive_at_their_parameters() {
    let cases = [
        (SeedId::D1, 1, 2),
        (SeedId::D2, 1, 2),
        (SeedId::D3, 1, 3),
        (SeedId::D3, 2, 2),
        (SeedId::D4, 2, 2),
        (SeedId::D5, 1, 2),
        (SeedId::D6, 1, 2),
        (SeedId::D7, 2, 2),
        (SeedId::D8, 1, 2),
        (SeedId::D9, 1, 2),
        (SeedId::D10, 1, 2),
    ];
    for (id, i, j) in cases {
        assert!(competitive(id, i, j), "{id} at ({i},{j})");
    }
}

#[test]
fn seeds_fail_below_their_parameters() {
    assert!(!competitive(SeedId::D7, 1, 2));
    assert!(!competitive(SeedId::D4, 1, 3));
    assert!(!competitive(SeedId::D3, 1, 2));
    for id in SeedId::CATALOG {
        assert!(!competitive(id, 1, 1), "{id}");
    }
}

#[test]
fn d3_same_block_pairs_compete() {
    let d3 = seed(SeedId::D3).unwrap();
    let d = d3.digraph();
    for block in [0..4, 4..8] {
        for u in block.clone() {
            for v in block.clone().filter(|&v| v > u) {
                assert!(ij_compete(d, u, v, s(2, 2)).unwrap().is_some(), "{u} {v}");
                assert!(ij_compete(d, u, v, s(1, 3)).unwrap().is_some(), "{u} {v}");
            }
        }
    }
    let missing = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
    assert!(missing.clone().any(|(u, v)| ij_compete(d, u, v, s(1, 1)).unwrap().is_none()));
}

#[test]
fn tournament_seeds_are_competitive() {
    for k in 5..=12 {
        let t = seed(SeedId::Tournament(k)).unwrap();
        for (i, j) in [(1, 2), (1, 3), (2, 2)] {
            assert!(is_competitive(t.digraph(), s(i, j)).unwrap().is_competitive(), "T{k}");
        }
    }
}

#[test]
fn construct_examples() {
    let built = |sizes: &[usize], i, j| match construct(&p(sizes), s(i, j)).unwrap() {
        Construction::Built { seed, orientation, .. } => (seed, orientation),
        other => panic!("{sizes:?}: {other:?}"),
    };
    let (id, d) = built(&[10, 5], 1, 2);
    assert_eq!((id, d), (SeedId::D2, seed(SeedId::D2).unwrap()));

    let (id, d) = built(&[12, 7], 1, 2);
    assert_eq!(id, SeedId::D1);
    assert_eq!(d.digraph().vertex_count(), 19);
    assert!(is_competitive(d.digraph(), s(1, 2)).unwrap().is_competitive());

    let (id, d) = built(&[2, 2, 2, 2, 2], 1, 3);
    assert_eq!(id, SeedId::Tournament(5));
    assert_eq!(d.digraph().vertex_count(), 10);
    assert!(is_competitive(d.digraph(), s(1, 3)).unwrap().is_competitive());

    let (id, _) = built(&[1, 1, 1, 1, 1, 1], 1, 2);
    assert_eq!(id, SeedId::Tournament(6));
}

#[test]
fn construct_is_sound_up_to_25_vertices() {
    let steps = [s(1, 2), s(1, 3), s(2, 2), s(2, 3), s(3, 3)];
    let mut built = 0;
    for part in partitions(25, 25, 25) {
        for &st in &steps {
            let verdict = decide(&part, st).unwrap();
            match construct(&part, st).unwrap() {
                Construction::Built { orientation, .. } => {
                    assert!(verdict.is_orientable(), "{part} {st}");
                    assert_eq!(orientation.partition(), &part);
                    assert_eq!(orientation.digraph().arc_count(), part.edge_count());
                    assert_eq!(is_competitive(orientation.digraph(), st).unwrap(), Competitiveness::Competitive);
                    built += 1;
                }
                Construction::NotOrientable { .. } => assert!(!verdict.is_orientable()),
                Construction::Unsupported => unreachable!(),
            }
        }
    }
    assert!(built > 10_000, "{built}");
}

#[test]
fn decide_is_swap_symmetric() {
    for part in partitions(12, 6, 8) {
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(decide(&part, s(i, j)).unwrap(), decide(&part, s(j, i)).unwrap());
            }
        }
    }
}

#[test]
fn grown_outputs_are_orientations() {
    for id in SeedId::CATALOG {
        let base = seed(id).unwrap();
        let bigger: Vec<usize> = base.partition().sizes().iter().enumerate().map(|(l, &n)| n + l % 3).collect();
        let g = grow(&base, &p(&bigger)).unwrap();
        assert_eq!(g.digraph().arc_count(), g.partition().edge_count());
    }
}

#[test]
fn verdict_clauses_for_named_cases() {
    let clause = |sizes: &[usize], i, j| match decide(&p(sizes), s(i, j)).unwrap() {
        Verdict::Orientable { clause, .. } | Verdict::NotOrientable { clause } => Some(clause),
        Verdict::Unsupported => None,
    };
    assert_eq!(clause(&[6, 3], 2, 2), Some(Clause::Ac));
    assert_eq!(clause(&[4, 2, 1], 2, 2), Some(Clause::Bc));
    assert_eq!(clause(&[3, 1, 1, 1], 1, 2), Some(Clause::CaI));
    assert_eq!(clause(&[1, 1, 1, 1, 1, 1, 1], 1, 2), Some(Clause::Cb));
    assert_eq!(clause(&[5, 5], 1, 1), None);
}
