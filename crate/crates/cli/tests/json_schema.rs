use qtorus_cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> Value {
    let out = run(["qtorus", "--json"].iter().chain(args));
    assert!(out.code <= 1, "{}", out.stderr);
    serde_json::from_str(&out.stdout).expect("one JSON document")
}

fn keys(v: &Value) -> Vec<&str> {
    v.as_object().unwrap().keys().map(String::as_str).collect()
}

#[test]
fn values_always_carry_every_key() {
    let want = ["base", "exponent", "k", "kind", "scalar", "terms", "text"];
    for expr in ["q^2 - 1", "U*V + 3", "V*U*u[u0,v0]", "<v[v0,u0] | u[u0,v0]>", "u[u0,v0] + V*u[u0,v0]"] {
        let v = json(&["eval", expr]);
        assert_eq!(keys(&v), want, "{expr}");
        assert!(v["terms"].is_array());
        assert!(v["text"].is_string());
    }
    let p = json(&["eval", "<v[q*v0,u0] | u[q*u0,v0]>"]);
    assert_eq!(p["kind"], "pairing");
    assert_eq!(p["exponent"], -1);
    let m = json(&["eval", "V*U*u[u0,v0]"]);
    assert_eq!(m["k"], -1);
    assert_eq!(m["base"]["sort"], "U");
    assert_eq!(m["scalar"], "u0*v0");
}

#[test]
fn reports_have_title_checks_result() {
    for args in [
        vec!["axioms", "--window", "2"],
        vec!["arith", "suite", "--window", "3"],
        vec!["transfer-check", "--s", "1", "--t", "-1", "--window", "2"],
        vec!["psi-check", "--window", "2", "--mutate", "q-is-one"],
    ] {
        let v = json(&args);
        assert_eq!(keys(&v), ["checks", "result", "title"], "{args:?}");
        for c in v["checks"].as_array().unwrap() {
            assert!(c["name"].is_string());
            assert!(["PASS", "FAIL", "SKIP"].contains(&c["status"].as_str().unwrap()));
        }
    }
}

#[test]
fn gamma_and_lang_type_shapes() {
    let g = json(&["arith", "mul", "-2", "7"]);
    assert_eq!(g["exponent"], -14);
    assert_eq!(g["text"], "q^-14");
    let l = json(&["lang-type", "--poly", "x1 - q^3*x2", "--arity", "2", "--window", "4"]);
    assert_eq!(keys(&l), ["arity", "cosets", "nf", "points", "report", "window"]);
    assert_eq!(l["nf"], 2);
    assert_eq!(l["cosets"][0]["base"], serde_json::json!([3, 0]));
    assert_eq!(l["cosets"][0]["generators"], serde_json::json!([[1, 1]]));
}
