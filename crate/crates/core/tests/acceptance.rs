//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any criterion fails or exceeds its time limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_graph, random_signing, rng, small_graphs, switching_classes, SEED};
use rand::Rng;
use signed_bounds::power::walk_reachability;
use signed_bounds::{
    bipartition, classify_consistency, clique_size_formula, cycle_sign, degree_gadget,
    find_graph_hom, find_signed_hom, find_signed_hom_to, is_clique, max_clique, min_degree,
    odd_construction, odd_girth, packing_to_spc, projective_cube, signed_bipartite_power,
    signed_construction, signed_projective_cube, subdivided_k4, switch, unbalanced_girth,
    verify_graph_hom, verify_hom, verify_hom_to, verify_packing, walk_power, Case,
    ConsistencyClass, Cycle, Girth, Graph, PathLengths, PlaneConstruction, SearchOutcome,
    SignedGraph, SignedTarget, SwitchSet,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn odd_gadget_power() -> Check {
    for k in 2..=4 {
        let start = Instant::now();
        let gadget = subdivided_k4(k, PathLengths::two_long(2 * k - 1), Case::Odd)
            .map_err(|e| e.to_string())?;
        let p = walk_power(gadget.graph(), 2 * k - 1).map_err(|e| e.to_string())?;
        ensure!(
            p == Graph::complete(4 * k),
            "k={k}: power is not K_{}",
            4 * k
        );
        ensure!(
            start.elapsed() < secs(1),
            "k={k}: took {:?}",
            start.elapsed()
        );
    }
    Ok(())
}

fn run_odd_family(k: usize, limit: Duration) -> Check {
    let start = Instant::now();
    let mut s = PlaneConstruction::initial(Case::Odd, k).map_err(|e| e.to_string())?;
    loop {
        s.check_invariants()
            .map_err(|e| format!("k={k} step {}: {e}", s.step()))?;
        if s.step() == 2 * k - 1 {
            break;
        }
        s = s.advance().map_err(|e| e.to_string())?;
    }
    let g = s.host().graph();
    ensure!(
        odd_girth(g) == Girth::Finite(2 * k + 1),
        "k={k}: odd girth {}",
        odd_girth(g)
    );
    let p = walk_power(g, 2 * k - 1).map_err(|e| e.to_string())?;
    let w: Vec<usize> = s.designated()[0].iter().copied().collect();
    ensure!(
        w.len() == 1 << (2 * k),
        "k={k}: designated size {}",
        w.len()
    );
    ensure!(is_clique(&p, &w), "k={k}: designated set is not a clique");
    if k == 2 {
        ensure!(g.vertex_count() == 26, "k=2: {} vertices", g.vertex_count());
    }
    ensure!(start.elapsed() < limit, "k={k}: took {:?}", start.elapsed());
    Ok(())
}

fn odd_family() -> Check {
    run_odd_family(2, secs(10))?;
    run_odd_family(3, secs(120))
}

fn closed_forms() -> Check {
    for (case, max_k) in [(Case::Odd, 4), (Case::Signed, 3)] {
        for k in 2..=max_k {
            let mut s = PlaneConstruction::initial(case, k).map_err(|e| e.to_string())?;
            loop {
                let i = s.step();
                let f = clique_size_formula(k, i, case).map_err(|e| e.to_string())?;
                for d in s.designated() {
                    ensure!(
                        d.len() == f,
                        "{} k={k} i={i}: built {} vs formula {f}",
                        case.name(),
                        d.len()
                    );
                }
                if i == 2 * k - 1 {
                    let closed = if case == Case::Odd {
                        1 << (2 * k)
                    } else {
                        1 << (2 * k - 2)
                    };
                    ensure!(f == closed, "{} k={k}: final {f} != {closed}", case.name());
                    break;
                }
                s = s.advance().map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(())
}

fn signed_gadget_power() -> Check {
    let start = Instant::now();
    for k in 2..=3 {
        let gadget = subdivided_k4(k, PathLengths::two_long(2 * k - 2), Case::Signed)
            .map_err(|e| e.to_string())?;
        let p = signed_bipartite_power(&gadget.host, 2 * k - 2).map_err(|e| e.to_string())?;
        let (x, y) = bipartition(gadget.graph()).ok_or("gadget not bipartite")?;
        ensure!(
            x.len() == 2 * k - 1 && y.len() == 2 * k - 1,
            "k={k}: parts {} and {}",
            x.len(),
            y.len()
        );
        for u in 0..p.vertex_count() {
            for v in u + 1..p.vertex_count() {
                let same = x.contains(&u) == x.contains(&v);
                ensure!(p.has_edge(u, v) == same, "k={k}: pair {u},{v} wrong");
            }
        }
    }
    ensure!(start.elapsed() < secs(5), "took {:?}", start.elapsed());
    Ok(())
}

fn signed_family() -> Check {
    let start = Instant::now();
    for (k, size) in [(2, 4), (3, 16)] {
        let s = signed_construction(k, 2 * k - 1).map_err(|e| e.to_string())?;
        s.check_invariants().map_err(|e| e.to_string())?;
        let ug = unbalanced_girth(s.host());
        ensure!(ug == Girth::Finite(2 * k), "k={k}: unbalanced girth {ug}");
        let p = signed_bipartite_power(s.host(), 2 * k - 2).map_err(|e| e.to_string())?;
        for d in s.designated() {
            let vs: Vec<usize> = d.iter().copied().collect();
            ensure!(vs.len() == size, "k={k}: part clique of size {}", vs.len());
            ensure!(is_clique(&p, &vs), "k={k}: part set is not a clique");
        }
    }
    ensure!(start.elapsed() < secs(120), "took {:?}", start.elapsed());
    Ok(())
}

fn projective_cubes() -> Check {
    let start = Instant::now();
    for d in 2..=6 {
        let spc = signed_projective_cube(d).map_err(|e| e.to_string())?;
        let g = spc.graph();
        ensure!(
            g.vertex_count() == 1 << d,
            "d={d}: {} vertices",
            g.vertex_count()
        );
        ensure!(
            (0..g.vertex_count()).all(|v| g.degree(v) == d + 1),
            "d={d}: not {}-regular",
            d + 1
        );
        ensure!(
            classify_consistency(&spc) != ConsistencyClass::Inconsistent,
            "d={d}: inconsistent"
        );
        let ug = unbalanced_girth(&spc);
        ensure!(ug == Girth::Finite(d + 1), "d={d}: unbalanced girth {ug}");
    }
    let pc2 = projective_cube(2).map_err(|e| e.to_string())?;
    ensure!(
        pc2.without_labels() == Graph::complete(4),
        "PC_2 is not K_4"
    );
    ensure!(start.elapsed() < secs(10), "took {:?}", start.elapsed());
    Ok(())
}

fn cube_tightness() -> Check {
    let start = Instant::now();
    let pc4 = projective_cube(4).map_err(|e| e.to_string())?;
    let p = walk_power(&pc4, 3).map_err(|e| e.to_string())?;
    ensure!(
        p.vertex_count() == 16 && p.is_complete(),
        "PC_4 cube is not K_16"
    );
    let spc3 = signed_projective_cube(3).map_err(|e| e.to_string())?;
    let sp = signed_bipartite_power(&spc3, 2).map_err(|e| e.to_string())?;
    let (x, y) = bipartition(spc3.graph()).ok_or("SPC_3 not bipartite")?;
    for part in [&x, &y] {
        ensure!(
            part.len() == 4 && is_clique(&sp, part),
            "part {part:?} not a K_4"
        );
    }
    ensure!(sp.edge_count() == 12, "cross-part edges present");
    ensure!(
        min_degree(&pc4) == 5,
        "min degree of PC_4 is {}",
        min_degree(&pc4)
    );
    ensure!(
        min_degree(spc3.graph()) == 4,
        "min degree of SPC_3 is {}",
        min_degree(spc3.graph())
    );
    ensure!(start.elapsed() < secs(5), "took {:?}", start.elapsed());
    Ok(())
}

fn gadget_check() -> Check {
    let start = Instant::now();
    for k in 2..=3 {
        let gadget = degree_gadget(k).map_err(|e| e.to_string())?;
        let og = odd_girth(&gadget.graph);
        ensure!(og == Girth::Finite(2 * k + 1), "k={k}: odd girth {og}");
        let p = walk_power(&gadget.graph, 2 * k - 1).map_err(|e| e.to_string())?;
        ensure!(
            gadget.xs.len() == 2 * k + 1 && is_clique(&p, &gadget.xs),
            "k={k}: x-vertices not a clique"
        );
    }
    ensure!(start.elapsed() < secs(5), "took {:?}", start.elapsed());
    Ok(())
}

fn packing_equivalence() -> Check {
    let start = Instant::now();
    let mut agreed = 0;
    for g in small_graphs(6, 8) {
        for sg in switching_classes(&g) {
            if classify_consistency(&sg) == ConsistencyClass::Inconsistent {
                continue;
            }
            for d in 1..=3 {
                let target = SignedTarget::projective_cube(d).map_err(|e| e.to_string())?;
                let hom = find_signed_hom_to(&sg, &target, None);
                let pack = packing_to_spc(&sg, d, None).map_err(|e| e.to_string())?;
                ensure!(
                    hom.is_found() == pack.is_found(),
                    "d={d}: disagreement on {:?} with sigma {:?}",
                    g.edges().collect::<Vec<_>>(),
                    sg.sigma()
                );
                if let Some(w) = hom.witness() {
                    ensure!(
                        verify_hom_to(&sg, &target, w) == Ok(true),
                        "bad hom witness"
                    );
                }
                if let Some(w) = pack.witness() {
                    ensure!(verify_packing(&sg, w) == Ok(true), "bad packing witness");
                }
                agreed += 1;
            }
        }
    }
    ensure!(agreed > 0, "empty corpus");
    ensure!(start.elapsed() < secs(300), "took {:?}", start.elapsed());
    println!("    {agreed} (signed graph, d) instances agree");
    Ok(())
}

fn cube_spot_checks() -> Check {
    let start = Instant::now();
    let pc4 = projective_cube(4).map_err(|e| e.to_string())?;
    let step1 = odd_construction(2, 1).map_err(|e| e.to_string())?;
    let r = find_graph_hom(step1.host().graph(), &pc4, None);
    let w = r
        .witness()
        .ok_or("odd_construction(2,1) has no map to PC_4")?;
    ensure!(
        verify_graph_hom(step1.host().graph(), &pc4, w) == Ok(true),
        "invalid witness"
    );

    let c4 = SignedGraph::new(
        Graph::cycle(4),
        [signed_bounds::Edge::new(0, 1)].into_iter().collect(),
    )
    .map_err(|e| e.to_string())?;
    let spc3 = signed_projective_cube(3).map_err(|e| e.to_string())?;
    let r = find_signed_hom(&c4, &spc3, None);
    let w = r.witness().ok_or("unbalanced C_4 has no map to SPC_3")?;
    ensure!(
        verify_hom(&c4, &spc3, w) == Ok(true),
        "invalid signed witness"
    );

    let step3 = odd_construction(2, 3).map_err(|e| e.to_string())?;
    let r = find_graph_hom(step3.host().graph(), &pc4, Some(100_000_000));
    match &r.outcome {
        SearchOutcome::Found(w) => ensure!(
            verify_graph_hom(step3.host().graph(), &pc4, w) == Ok(true),
            "invalid witness for the 26-vertex graph"
        ),
        SearchOutcome::Absent => return Err("26-vertex graph has no map to PC_4".into()),
        SearchOutcome::Unknown => return Err(format!("budget exhausted after {} nodes", r.nodes)),
    }
    println!("    26-vertex construction -> PC_4 in {} nodes", r.nodes);
    ensure!(start.elapsed() < secs(300), "took {:?}", start.elapsed());
    Ok(())
}

fn matrix_power(g: &Graph, k: usize) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j).collect()).collect();
    for _ in 0..k {
        m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).any(|t| m[i][t] && g.has_edge(t, j)))
                    .collect()
            })
            .collect();
    }
    m
}

fn exhaustive_omega(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || s & !(1 << v) & !adj[v] == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn property_suites() -> Check {
    let start = Instant::now();
    let mut rng = rng();

    for _ in 0..300 {
        let n = rng.gen_range(3..=9);
        let g = random_graph(&mut rng, n, 0.4);
        let sg = random_signing(&mut rng, &g, 0.4);
        let s = SwitchSet::new((0..n).filter(|_| rng.gen_bool(0.5)));
        let switched = switch(&sg, &s).map_err(|e| e.to_string())?;
        ensure!(
            switch(&switched, &s).as_ref() == Ok(&sg),
            "switching is not an involution"
        );
        ensure!(
            unbalanced_girth(&sg) == unbalanced_girth(&switched),
            "unbalanced girth changed by switching"
        );
        for c in common::all_cycles(&g) {
            let cycle = Cycle::new(&g, c).map_err(|e| e.to_string())?;
            ensure!(
                cycle_sign(&sg, &cycle) == cycle_sign(&switched, &cycle),
                "cycle sign changed by switching"
            );
        }
    }

    for k in [1, 3, 5] {
        let h = projective_cube(k + 1).map_err(|e| e.to_string())?;
        let hp = walk_power(&h, k).map_err(|e| e.to_string())?;
        for _ in 0..20 {
            let n = rng.gen_range(4..=14);
            let f: Vec<usize> = (0..n).map(|_| rng.gen_range(0..h.vertex_count())).collect();
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if h.has_edge(f[u], f[v]) && rng.gen_bool(0.6) {
                        g.add_edge(u, v).map_err(|e| e.to_string())?;
                    }
                }
            }
            let w = find_graph_hom(&g, &h, None)
                .into_witness()
                .ok_or("solver missed a homomorphism")?;
            let gp = walk_power(&g, k).map_err(|e| e.to_string())?;
            ensure!(
                verify_graph_hom(&gp, &hp, &w) == Ok(true),
                "walk-power not functorial at k={k}"
            );
        }
    }

    for _ in 0..200 {
        let n = rng.gen_range(1..=30);
        let p = rng.gen_range(0.03..0.2);
        let g = random_graph(&mut rng, n, p);
        for k in [3, 5, 7] {
            let rows = walk_reachability(&g, k);
            let m = matrix_power(&g, k);
            ensure!(
                (0..n).all(|i| (0..n).all(|j| rows[i].contains(j) == m[i][j])),
                "reachability differs from matrix power (n={n}, k={k})"
            );
        }
    }

    for _ in 0..100 {
        let n = rng.gen_range(0..=18);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let found = max_clique(&g, None);
        ensure!(
            found.certificate.proven && is_clique(&g, &found.certificate.vertices),
            "invalid clique certificate"
        );
        ensure!(
            found.certificate.omega() == exhaustive_omega(&g),
            "max_clique disagrees with enumeration (n={n})"
        );
    }
    ensure!(start.elapsed() < secs(300), "took {:?}", start.elapsed());
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "subdivided K4: walk-power complete on 4k vertices",
            odd_gadget_power,
        ),
        (
            "odd family: designated 2^(2k) clique, odd girth, Euler",
            odd_family,
        ),
        ("designated clique sizes match closed forms", closed_forms),
        ("signed subdivided K4: two (2k-1)-cliques", signed_gadget_power),
        (
            "signed family: part cliques 2^(2k-2), unbalanced girth",
            signed_family,
        ),
        (
            "projective cubes: order, regularity, girth",
            projective_cubes,
        ),
        ("cube tightness: PC_4 and SPC_3 powers", cube_tightness),
        ("degree gadget: (2k+1)-clique of x-vertices", gadget_check),
        (
            "packing oracle agrees with cube homomorphism search",
            packing_equivalence,
        ),
        (
            "homomorphisms to cubes at small dimension",
            cube_spot_checks,
        ),
        ("property suites", property_suites),
    ];
    println!("acceptance (seed {SEED:#x})");
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({elapsed:.2?})", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
