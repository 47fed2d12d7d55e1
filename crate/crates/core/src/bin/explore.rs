use superalg::expr::{Expr, ExprEnv};
use superalg::proofs::{registry, verify_case, CaseSpec};

fn spec(id: &str) -> CaseSpec {
    registry::all_cases()
        .unwrap()
        .into_iter()
        .find(|c| c.id == id)
        .unwrap()
}

fn show(env: &ExprEnv, label: &str, e: &Expr) {
    match e.eval(env) {
        Ok(v) => println!("  {label} = {v}"),
        Err(err) => println!("  {label} : error {err}"),
    }
}

fn osp_probe() {
    let case = spec("jordan-osp24");
    let prep = case.prepare().unwrap();
    let env = ExprEnv {
        algebra: &prep.algebra,
        names: prep.names.clone(),
    };
    let base = Expr::mul(
        Expr::sub(
            Expr::mul(Expr::name("x"), Expr::name("s")),
            Expr::name("x"),
        ),
        Expr::name("s"),
    );
    show(&env, "(x o S - x) o S", &base);
    let mut stage = base.clone();
    for b in ["a11", "c1_11", "c1_21"] {
        stage = Expr::mul(stage, Expr::basis(b));
        show(&env, &format!("... o {b}"), &stage);
    }
    for b in [
        "b1_11", "b2_11", "b1_12", "b2_12", "b1_21", "b2_21", "b1_22", "b2_22",
    ] {
        show(
            &env,
            &format!("... o {b} (x2)"),
            &Expr::imul(2, Expr::mul(stage.clone(), Expr::basis(b))),
        );
    }
}

fn h3_probe() {
    let case = spec("jordan-h3");
    let prep = case.prepare().unwrap();
    let env = ExprEnv {
        algebra: &prep.algebra,
        names: prep.names.clone(),
    };
    // One representative per cell: the delta_1 record (cell 12), epsilon_1
    // (cell 13), mu_1 (cell 23), and the negated / diagonal-cell shapes.
    let shapes = [
        ("delta_1", "d1", "d2", "m2_12", "e13", "d1"),
        ("epsilon_1", "d1", "d3", "m2_13", "e12", "d1"),
        ("mu_1", "d2", "d3", "m2_23", "e12", "d2"),
        ("-alpha_21", "d1", "d2", "e12_12", "e13", "d1"),
        ("alpha_11", "d1", "d2", "e22_12", "e13", "d1"),
    ];
    for (label, dd1, dd2, conj, spread, dsub) in shapes {
        println!("{label}: V = ((a*{dd1})*{dd2})*{conj}");
        let v = Expr::mul(
            Expr::chain(vec![Expr::name("a"), Expr::basis(dd1), Expr::basis(dd2)]),
            Expr::basis(conj),
        );
        show(&env, "V", &v);
        let p1 = Expr::mul(
            Expr::mul(v.clone(), Expr::name(spread)),
            Expr::name(spread),
        );
        show(&env, &format!("(V*{spread})*{spread}"), &p1);
        show(&env, &format!("V*{dsub}"), &Expr::mul(v.clone(), Expr::basis(dsub)));
        for other in ["d1", "d2", "d3"] {
            if other != dsub {
                show(
                    &env,
                    &format!("V*{other}"),
                    &Expr::mul(v.clone(), Expr::basis(other)),
                );
            }
        }
        println!();
    }
}

fn main() {
    let mode = std::env::args().nth(1);
    match mode.as_deref() {
        Some("osp") => osp_probe(),
        Some("h3") => h3_probe(),
        filter => {
            let cases = registry::all_cases().expect("registry builds");
            for case in &cases {
                if let Some(f) = filter {
                    if !case.id.contains(f) {
                        continue;
                    }
                }
                match verify_case(case) {
                    Ok(report) => println!("{report}"),
                    Err(e) => println!("case {}: ERROR {e}", case.id),
                }
                println!();
            }
        }
    }
}
