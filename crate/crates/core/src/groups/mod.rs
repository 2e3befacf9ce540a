//! Finite groups behind the mod-2 representation: `S6 = GSp4(F2)` acting on
//! `W = V/U`, the two copies of `S5` in `S6`, and `SL2(F4) = A5`.

pub mod f4;
pub mod perm;
pub mod s5;
pub mod symplectic;

pub use f4::{sl2f4_class_of, sl2f4_to_a5, SL2F4Class, F4, SL2F4};
pub use perm::{Perm, Perm5, Perm6};
pub use s5::{classify_s5_image, point_stabilizer_s5, transitive_s5, S5Class, S5Type};
pub use symplectic::{gsp4_order_check, pairing_w, phi, Mat4F2, SpMat4, WVec};

use std::collections::BTreeSet;
use std::fmt;

/// One line of the verification table.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub observed: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SelfTest {
    pub checks: Vec<Check>,
}

impl SelfTest {
    fn push(&mut self, name: &str, expected: impl fmt::Display, observed: impl fmt::Display) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let ok = expected == observed;
        self.checks.push(Check {
            name: name.into(),
            expected,
            observed,
            ok,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

impl fmt::Display for SelfTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{:<4} {:<48} expected {:<24} observed {}",
                if c.ok { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.observed
            )?;
        }
        Ok(())
    }
}

fn fmt_type(t: &[usize]) -> String {
    t.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn verdict(r: crate::Result<S5Type>) -> String {
    match r {
        Ok(t) => format!("{t:?}"),
        Err(e) => e.to_string(),
    }
}

/// Runs every group-theoretic check and collects the results.
pub fn selftest() -> SelfTest {
    let mut t = SelfTest::default();

    let oc = gsp4_order_check();
    t.push("|phi(S6)|", 720, oc.image_size);
    t.push("|{X : X^t J X = J}|", 720, oc.solution_count);
    t.push("phi injective", true, oc.injective);
    t.push("phi(S6) = solution set", true, oc.image_equals_solutions);

    let all = Perm6::all();
    let hom = all.iter().step_by(11).all(|g| {
        all.iter()
            .step_by(13)
            .all(|h| phi(&g.compose(h)) == phi(g).mul(&phi(h)))
    });
    t.push("phi(gh) = phi(g)phi(h)", true, hom);

    let alternating = WVec::all().all(|u| pairing_w(u, u) == 0);
    t.push("pairing alternating", true, alternating);
    let nondeg = WVec::all()
        .filter(|u| u.coords() != 0)
        .all(|u| WVec::all().any(|v| pairing_w(u, v) == 1));
    t.push("pairing nondegenerate", true, nondeg);
    let preserved = all.iter().all(|g| {
        let m = phi(g);
        WVec::all().all(|u| {
            WVec::all()
                .all(|v| pairing_w(m.matrix().apply(u), m.matrix().apply(v)) == pairing_w(u, v))
        })
    });
    t.push("phi(g) preserves the pairing", true, preserved);

    let h = transitive_s5();
    t.push("|transitive S5|", 120, h.len());
    t.push("transitive S5 is transitive", true, perm::is_transitive(&h));
    let traces: BTreeSet<u8> = h
        .iter()
        .filter(|g| matches!(g.order(), 3 | 6))
        .map(|g| phi(g).trace())
        .collect();
    t.push(
        "traces of order-3/6 elements (transitive)",
        "{0}",
        format!("{traces:?}"),
    );
    t.push(
        "contains a (3,3) element",
        true,
        h.iter().any(|g| g.cycle_type() == [3, 3]),
    );
    t.push(
        "classify(transitive S5)",
        "S5a",
        verdict(classify_s5_image(&h)),
    );
    let stab = point_stabilizer_s5();
    let traces_b: BTreeSet<u8> = stab
        .iter()
        .filter(|g| matches!(g.order(), 3 | 6))
        .map(|g| phi(g).trace())
        .collect();
    t.push(
        "traces of order-3/6 elements (stabilizer)",
        "{1}",
        format!("{traces_b:?}"),
    );
    t.push(
        "classify(point stabilizer)",
        "S5b",
        verdict(classify_s5_image(&stab)),
    );

    match s5::fixed_point_table(&h) {
        Ok(table) => {
            let expected = [
                (S5Class::Identity, "1,1,1,1,1,1"),
                (S5Class::Transposition, "2,2,2"),
                (S5Class::DoubleTransposition, "2,2,1,1"),
                (S5Class::ThreeCycle, "3,3"),
                (S5Class::FourCycle, "4,1,1"),
                (S5Class::FiveCycle, "5,1"),
                (S5Class::ThreeTwo, "6"),
            ];
            for (class, want) in expected {
                let seen = table
                    .get(&class)
                    .map(|s| {
                        s.iter()
                            .map(|v| fmt_type(v))
                            .collect::<Vec<_>>()
                            .join(" | ")
                    })
                    .unwrap_or_default();
                t.push(&format!("S6 cycle type of S5 class {class:?}"), want, seen);
            }
        }
        Err(e) => t.push("S5 class table", "ok", e),
    }

    let sl2 = SL2F4::all();
    let images: BTreeSet<Perm5> = sl2.iter().map(sl2f4_to_a5).collect();
    t.push("|image of SL2(F4) in S5|", 60, images.len());
    t.push(
        "image consists of even permutations",
        true,
        images.iter().all(|g| g.is_even()),
    );
    let mut sizes = std::collections::BTreeMap::new();
    for m in &sl2 {
        let c = sl2f4_class_of(m)
            .map(|c| format!("{c:?}"))
            .unwrap_or_else(|e| e.to_string());
        *sizes.entry(c).or_insert(0usize) += 1;
    }
    t.push(
        "SL2(F4) class sizes (1,2,3,5A,5B)",
        "1,15,20,12,12",
        ["One", "Two", "Three", "FiveA", "FiveB"]
            .iter()
            .map(|k| sizes.get(*k).copied().unwrap_or(0).to_string())
            .collect::<Vec<_>>()
            .join(","),
    );
    t
}

#[cfg(test)]
mod tests {
    #[test]
    fn selftest_passes() {
        let t = super::selftest();
        assert!(t.passed(), "\n{t}");
    }
}
