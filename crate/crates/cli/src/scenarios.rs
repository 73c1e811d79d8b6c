//! Built-in worked examples with stored expected outcomes.

use serde_json::Value;

use crate::report::Entry;

pub struct Scenario {
    pub name: &'static str,
    pub text: &'static str,
    /// `(check index, JSON pointer into the entry, expected value)`.
    pub assertions: &'static [(usize, &'static str, &'static str)],
}

pub const HYPERSURFACE: &str = "\
# F_2[x,y,z]/(x^2+y^3+z^5) with the parameter ideal (y,z)
ring R = quotient(poly(F(2), [x, y, z]), [x^2+y^3+z^5]);
ideal q = ideal(y, z);
check dim(R) --expect 2;
check is_sop(q) --expect PASS;
check frobenius_member(x, q) emax 1 --expect IN;
check frobenius_closed(q) --expect OUT;
check ideal_equal(bracket(maximal, 1), bracket(q, 1)) --expect PASS;
check frobenius_closure(q) window 2 --expect PASS;
check ideal_equal(colon(q, maximal), maximal) --expect PASS;
check colon_socle(q) --expect PASS;
check jacobian(R) --expect PASS;
check tight_member(x, q) using c=auto emax 2 --expect IN;
";

pub const ONE_DIM: &str = "\
# F_2(u)[x,y]/(xy): principal ideals (x^n+u y^m)(x^nq+u^q y^mq)
ring R = quotient(poly(F(2, [u]), [x, y]), [x*y]);
check dim(R) --expect 1;
check jacobian(R) --expect PASS;
check congruent((x+u*y)*(x^2+u^2*y^2), x^3+u^3*y^3) --expect PASS;
check congruent((x+u*y^2)*(x^2+u^2*y^4), x^3+u^3*y^6) --expect PASS;
check congruent((x^2+u*y^3)*(x^8+u^4*y^12), x^10+u^5*y^15) --expect PASS;
check tight_member(x^3, ideal((x+u*y)*(x^2+u^2*y^2))) using c=x+y emax 4 --expect UNKNOWN;
check tight_member(x^3, ideal((x+u*y^2)*(x^2+u^2*y^4))) using c=x+y emax 4 --expect UNKNOWN;
check tight_member(x^10, ideal((x^2+u*y^3)*(x^8+u^4*y^12))) using c=x+y emax 4 --expect UNKNOWN;
";

pub const VERONESE: &str = "\
# second Veronese of F_2(u,v)[x,y,z]/(x^2+u y^2+v z^2)
ring S = quotient(poly(F(2, [u, v]), [x, y, z]), [x^2+u*y^2+v*z^2]);
subring T = veronese(S, 2) vars [a, b, c, d, e];
ideal q1 = ideal(x^2, y^2);
ideal q2 = ideal(x*y, z^2);
elem w = y*z^3;
check dim(T) --expect 2;
check is_sop(q1) --expect PASS;
check is_sop(q2) --expect PASS;
check member(w, q1 * q2) --expect OUT;
check member(y^2*z^6, bracket(q1 * q2, 1)) --expect IN;
check frobenius_closed(q1 * q2) emax 1 probes [w] --expect OUT;
check product_identity(q1, q2) emax 1 probes [w] --expect FAIL;
";

pub const SCENARIOS: &[Scenario] = &[
    Scenario {
        name: "hypersurface-255",
        text: HYPERSURFACE,
        assertions: &[(3, "/value/witness", "x"), (3, "/value/e", "1"), (5, "/value/stable", "true")],
    },
    Scenario {
        name: "one-dim-xy",
        text: ONE_DIM,
        assertions: &[
            (1, "/value/0", "x + y"),
            (5, "/value/positive", "5"),
            (5, "/value/negative", "0"),
            (6, "/value/positive", "5"),
            (7, "/value/positive", "5"),
        ],
    },
    Scenario {
        name: "veronese-F2uv",
        text: VERONESE,
        assertions: &[(5, "/value/witness_image", "y*z^3"), (5, "/value/e", "1"), (6, "/value/frobenius_layer/product_closed", "OUT")],
    },
];

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// One PASS/FAIL entry per stored assertion.
pub fn assertion_entries(s: &Scenario, entries: &[Entry]) -> Vec<Entry> {
    s.assertions
        .iter()
        .map(|(k, ptr, want)| {
            let got = entries.get(*k).and_then(|e| serde_json::to_value(e).ok()).and_then(|v| v.pointer(ptr).map(render));
            let ok = got.as_deref() == Some(*want);
            Entry {
                index: 0,
                scenario: None,
                check: "assert".into(),
                directive: format!("assert #{k}{ptr} == {want}"),
                ring: entries.get(*k).map(|e| e.ring.clone()).unwrap_or_default(),
                status: if ok { "PASS" } else { "FAIL" }.into(),
                expected: Some("PASS".into()),
                matched: Some(ok),
                value: got.map(Value::String),
                certificate: None,
                verified: None,
                narrative: "stored witness assertion".into(),
                timing_ms: None,
            }
        })
        .collect()
}
