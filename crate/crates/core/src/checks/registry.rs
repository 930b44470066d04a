//! The registered checks. Each runner is a plain function so the registry
//! stays a data table; parametrized families share a runner and differ in
//! the stored argument.

use crate::burau::{
    braid_relations_hold, det_of_word, eval_braid, gamma_eval, golden_x, golden_y, golden_yxy,
    kernel_gamma, kernel_mod2, sigma,
};
use crate::conjugation::{
    build_mf, claim2_x_conjugation, conj_power_check, eq4_holds_for, lamplighter_window_check,
    lemma34_check, lemma34_x0_linear, lemma34_x0_projective, lemma_m, parse_fraction,
};
use crate::error::Result;
use crate::groups::{
    b_position, check_relations, claim1_eqs_15_17, eqs_12_14, lemma_a2_relations,
    normal_form_check, theorem_a1_relations, word_position, xa_assignment, xb_assignment,
    FiniteGroupTable, Relation,
};
use crate::matrix::{proj_eq, Mat3};
use crate::ring::{LaurentF2, LaurentInt, RatF2, Ring};
use crate::words::{
    braid, corollary_telescoping_check, family_b, family_x, telescoping_product, word_x, word_y,
    word_yxy, GroupWord, Letter,
};

use super::{verdict, CheckContext, CheckDef, Outcome};

fn word_d() -> GroupWord {
    GroupWord::gen(Letter::D)
}

fn xi(ctx: &CheckContext, i: i64) -> Result<GroupWord> {
    family_x(i, ctx.config().family_depth)
}

fn comm(a: &GroupWord, b: &GroupWord) -> GroupWord {
    GroupWord::commutator(a, b).expect("same alphabet")
}

// ---- basics ------------------------------------------------------------

fn run_golden_matrices(_: &CheckContext, _: i64) -> Result<Outcome> {
    let ok = eval_braid::<LaurentF2>(&word_x())? == golden_x()
        && eval_braid::<LaurentF2>(&word_y())? == golden_y()
        && eval_braid::<LaurentF2>(&word_yxy())? == golden_yxy()
        && golden_x().mul(&sigma::<LaurentF2>(1)) == golden_y();
    verdict(
        ok,
        "mod-2 images of x, y, yxy match entry-exactly; y = x·β(σ₁)",
    )
}

fn run_braid_relations(_: &CheckContext, _: i64) -> Result<Outcome> {
    let ok = braid_relations_hold::<LaurentInt>() && braid_relations_hold::<LaurentF2>();
    verdict(ok, "braid relations hold over ℤ[t,t⁻¹] and F₂[t,t⁻¹]")
}

fn run_eq1(_: &CheckContext, _: i64) -> Result<Outcome> {
    let m = eval_braid::<LaurentInt>(&word_d().pow(2))?;
    let expected = Mat3::identity().scale(&LaurentInt::monomial(4, 1));
    verdict(
        m == expected && m.is_scalar(),
        "β₄(Δ²) = t⁴I₃, a scalar matrix",
    )
}

fn run_pres_b4(_: &CheckContext, _: i64) -> Result<Outcome> {
    let x4 = eval_braid::<LaurentInt>(&word_x().pow(4))?;
    let y3 = eval_braid::<LaurentInt>(&word_y().pow(3))?;
    let d2 = eval_braid::<LaurentInt>(&word_d().pow(2))?;
    let c = eval_braid::<LaurentInt>(&comm(&word_x().pow(2), &word_yxy()))?;
    verdict(
        x4 == y3 && x4 == d2 && c.is_identity(),
        "over ℤ: β₄(x)⁴ = β₄(y)³ = β₄(Δ²) and β₄([x², yxy]) = I₃",
    )
}

fn run_pres_q4(_: &CheckContext, _: i64) -> Result<Outcome> {
    let ok = kernel_gamma(&word_x().pow(4))?
        && kernel_gamma(&word_y().pow(3))?
        && kernel_gamma(&comm(&word_x().pow(2), &word_yxy()))?;
    verdict(ok, "γ(x⁴) = γ(y³) = γ([x², yxy]) = 1 projectively")
}

fn run_eq7(_: &CheckContext, _: i64) -> Result<Outcome> {
    let x4 = eval_braid::<LaurentF2>(&word_x().pow(4))?;
    let y3 = eval_braid::<LaurentF2>(&word_y().pow(3))?;
    let d2 = eval_braid::<LaurentF2>(&word_d().pow(2))?;
    verdict(
        x4 == d2 && y3 == d2,
        "mod 2: x⁴ = Δ² = y³ as matrices (= t⁴I₃)",
    )
}

fn run_det_t3(_: &CheckContext, _: i64) -> Result<Outcome> {
    let dx = det_of_word::<LaurentF2>(&word_x())?;
    let dy = det_of_word::<LaurentF2>(&word_y())?;
    let dyxy = det_of_word::<LaurentF2>(&word_yxy())?;
    let ok =
        dx == LaurentF2::t_pow(3) && dyxy == LaurentF2::t_pow(11) && dy.mul(&dy).mul(&dx) == dyxy;
    verdict(ok, "det x = t³, det yxy = t¹¹ = (det y)² det x")
}

fn run_cor12_word(_: &CheckContext, _: i64) -> Result<Outcome> {
    let c = comm(&word_yxy(), &word_x());
    let x4 = word_x().pow(4);
    let main = corollary_telescoping_check();
    // negative controls: the three-factor variant keeps its t x^-3 t^-1
    // tail, and without the relator the x^-4 tail survives
    let three = telescoping_product(3).rewrite_with_relators(std::slice::from_ref(&x4));
    let three_differs = three != c.pow(3);
    let no_relator_differs = telescoping_product(4).rewrite_with_relators(&[]) != c.pow(4);
    verdict(
        main && three_differs && no_relator_differs,
        "α(δαδ⁻¹)(δ²αδ⁻²)(δ³αδ⁻³) rewrites to [yxy,x]⁴ under free reduction + x⁴ deletion",
    )
}

fn run_cor12_nontrivial(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let x1 = xi(ctx, 1)?;
    let m = eval_braid::<LaurentInt>(&x1)?;
    let det_one = m.det().is_one();
    let not_scalar = !m.pow(4)?.is_scalar();
    verdict(
        det_one && not_scalar,
        "over ℤ: det β₄(x₁) = 1 and β₄(x₁⁴) is not scalar, so x₁⁴ ≠ 1 in Q₄",
    )
}

// ---- kernel certificates -----------------------------------------------

fn run_lem32_kernel(ctx: &CheckContext, i: i64) -> Result<Outcome> {
    let xi = xi(ctx, i)?;
    let fourth = eval_braid::<LaurentF2>(&xi.pow(4))?;
    let c = eval_braid::<LaurentF2>(&comm(&xi.pow(2), &word_yxy()))?;
    verdict(
        fourth.is_identity() && c.is_identity(),
        format!("mod-2 images of x_{i}⁴ and [x_{i}², yxy] are I₃"),
    )
}

fn run_lem22_kernel(ctx: &CheckContext, i: i64) -> Result<Outcome> {
    let xi = xi(ctx, i)?;
    let ok = gamma_eval(&xi.pow(4))?.is_identity()
        && gamma_eval(&comm(&xi.pow(2), &word_yxy()))?.is_identity();
    verdict(
        ok,
        format!("γ(x_{i}⁴) and γ([x_{i}², yxy]) are the identity"),
    )
}

// ---- conjugation -------------------------------------------------------

fn run_eq4(_: &CheckContext, _: i64) -> Result<Outcome> {
    let mf = build_mf(&RatF2::one())?;
    verdict(
        mf.check_eq4() && mf.matrix() == &lemma_m(),
        "M = M₁ satisfies MxM⁻¹ = t[yxy,x] and M(yxy)M⁻¹ = yxy exactly",
    )
}

fn mf_family() -> Result<Vec<(String, RatF2)>> {
    Ok(["1", "t", "t^2", "1+t", "1/1+t"]
        .into_iter()
        .map(|s| (s.to_string(), parse_fraction(s).expect("valid fraction")))
        .collect())
}

fn run_mf_det(_: &CheckContext, _: i64) -> Result<Outcome> {
    // det M_f = t^2 is enforced at construction; building is the check
    let mut tried = Vec::new();
    for (name, f) in mf_family()? {
        build_mf(&f)?;
        tried.push(name);
    }
    build_mf(&RatF2::zero())?;
    build_mf(&parse_fraction("t^3/1+t^2")?)?;
    tried.extend(["0".into(), "t^3/1+t^2".into()]);
    verdict(
        true,
        format!("det M_f = t² for f ∈ {{{}}}", tried.join(", ")),
    )
}

fn run_mf_eq4(_: &CheckContext, _: i64) -> Result<Outcome> {
    let mut all = true;
    for (name, f) in mf_family()? {
        if !build_mf(&f)?.check_eq4() {
            return verdict(false, format!("conjugation identities fail for f = {name}"));
        }
        all &= true;
    }
    // a perturbed matrix must fail
    let m = lemma_m();
    let swapped = Mat3::from_fn(|i, j| match (i, j) {
        (1, 0) => m.entry(1, 1).clone(),
        (1, 1) => m.entry(1, 0).clone(),
        _ => m.entry(i, j).clone(),
    });
    verdict(
        all && !eq4_holds_for(&swapped),
        "M_f xM_f⁻¹ = t[yxy,x], M_f(yxy)M_f⁻¹ = yxy for all five f; perturbed matrix fails",
    )
}

fn run_eq5_powers(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let depth = ctx.config().conj_depth;
    let mut count = 0;
    for i in 0..depth {
        for k in 1..=depth - i {
            if !conj_power_check(i, k, depth)? {
                return verdict(false, format!("p(M)^{k} x_{i} p(M)^-{k} ≠ x_{}", i + k));
            }
            count += 1;
        }
    }
    verdict(
        true,
        format!("p(M)ᵏ xᵢ p(M)⁻ᵏ = xᵢ₊ₖ for all {count} pairs with i+k ≤ {depth}"),
    )
}

fn run_lem34(_: &CheckContext, _: i64) -> Result<Outcome> {
    let ok = lemma34_check()? && !lemma34_x0_linear()? && lemma34_x0_projective()?;
    verdict(
        ok,
        "Mx₁M⁻¹ = [yxy,x₁] exactly; with x₀ the identity only holds projectively (scalar t)",
    )
}

fn run_lamplighter(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let depth = ctx.config().conj_depth;
    for i in 0..=2 {
        for window in 1..=2 {
            if !lamplighter_window_check(i, window, depth)? {
                return verdict(
                    false,
                    format!("window relations fail at i={i}, window={window}"),
                );
            }
        }
    }
    verdict(
        true,
        "xᵢ² is a projective involution and its p(M)-window conjugates commute (i ≤ 2, window ≤ 2)",
    )
}

// ---- stabilizer structure ------------------------------------------------

fn center_generators(table: &FiniteGroupTable, n: i64) -> Result<Vec<usize>> {
    let x = word_position(table, &word_x())?;
    let mut gens = vec![table.power_pos(x, 2)];
    for i in 1..=n + 1 {
        gens.push(table.power_pos(b_position(table, i)?, 2));
    }
    Ok(gens)
}

fn run_stab_order(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let expected = 1usize << (2 * n + 4);
    verdict(
        table.order() == expected,
        format!("|Stab(7⁽{n}⁾)| = {}", table.order()),
    )
}

fn run_center(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let center = table.center();
    let generated = table.subgroup(&center_generators(&table, n)?);
    let ok = center.len() == 1 << (n + 2)
        && center.elementary_abelian_2_rank() == Some(n as u32 + 2)
        && generated.member_set() == center.member_set();
    verdict(
        ok,
        format!(
            "center has order {}, elementary abelian, = ⟨x², b₁², …, b_{}²⟩",
            center.len(),
            n + 1
        ),
    )
}

fn run_exponent(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let center = table.center();
    let squares_central = (0..table.order()).all(|g| center.contains(table.power_pos(g, 2)));
    verdict(
        table.exponent() == 4 && squares_central,
        format!("exponent(Stab(7⁽{n}⁾)) = 4 and g² is central for every g"),
    )
}

fn run_derived(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let derived = table.derived_subgroup();
    let mut gens = Vec::new();
    for i in 1..=n + 1 {
        gens.push(table.power_pos(b_position(&table, i)?, 2));
    }
    let generated = table.subgroup(&gens);
    let ok = derived.len() == 1 << (n + 1)
        && derived.elementary_abelian_2_rank() == Some(n as u32 + 1)
        && generated.member_set() == derived.member_set();
    verdict(
        ok,
        format!(
            "derived subgroup has order {}, elementary abelian, = ⟨b₁², …, b_{}²⟩",
            derived.len(),
            n + 1
        ),
    )
}

fn run_class(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    verdict(
        table.nilpotency_class() == Some(2),
        format!("Stab(7⁽{n}⁾) is nilpotent of class 2"),
    )
}

fn run_normal_form(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    verdict(
        normal_form_check(&table, n)?,
        format!(
            "(z, p) ↦ z·x^i₀b₁^i₁…b_{}^i_{} is a bijection onto Stab(7⁽{n}⁾)",
            n + 1,
            n + 1
        ),
    )
}

fn run_thm_a1(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let assignment = xa_assignment(&table, n)?;
    let report = check_relations(&table, &assignment, &theorem_a1_relations(n))?;
    verdict(report.all_pass(), report.summary())
}

fn run_lem_a2(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let assignment = xb_assignment(&table, n)?;
    let report = check_relations(&table, &assignment, &lemma_a2_relations(n))?;
    verdict(report.all_pass(), report.summary())
}

fn run_eqs_12_14(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let table = ctx.stab7(n)?;
    let assignment = xb_assignment(&table, n)?;
    let report = check_relations(&table, &assignment, &eqs_12_14(n))?;
    verdict(report.all_pass(), report.summary())
}

fn run_claim1(ctx: &CheckContext, n: i64) -> Result<Outcome> {
    let relations = claim1_eqs_15_17(n);
    if relations.is_empty() {
        return Ok(Outcome::Skipped(format!("no instances at n = {n}")));
    }
    let table = ctx.stab7(n)?;
    let assignment = xb_assignment(&table, n)?;
    let report = check_relations(&table, &assignment, &relations)?;
    verdict(report.all_pass(), report.summary())
}

// ---- appendix word families ----------------------------------------------

fn run_lem_a6_relations(_: &CheckContext, _: i64) -> Result<Outcome> {
    if !kernel_gamma(&comm(&word_x().pow(2), &word_yxy()))? {
        return verdict(false, "γ([x², yxy]) ≠ 1");
    }
    for i in 1..=5 {
        let bi = family_b(i)?;
        if !kernel_gamma(&comm(&bi.pow(2), &word_yxy()))? {
            return verdict(false, format!("γ([b_{i}², yxy]) ≠ 1"));
        }
    }
    verdict(true, "γ([x², yxy]) = γ([bᵢ², yxy]) = 1 for i = 1..5")
}

fn run_lem_a6_eq18(_: &CheckContext, _: i64) -> Result<Outcome> {
    for i in 1..=5 {
        let lhs = family_b(i)?.conjugated(&word_yxy())?;
        let rhs = family_b(1)?.inverse().concat(&family_b(i + 1)?)?;
        if lhs != rhs || gamma_eval(&lhs)? != gamma_eval(&rhs)? {
            return verdict(false, format!("(yxy)b_{i}(yxy)⁻¹ ≠ b₁⁻¹b_{}", i + 1));
        }
    }
    verdict(
        true,
        "(yxy)bᵢ(yxy)⁻¹ = b₁⁻¹bᵢ₊₁ freely and projectively, i = 1..5",
    )
}

fn run_lem_a7_identity(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    for i in 1..=5 {
        let lhs = family_b(-i)?;
        let rhs = GroupWord::compose(&[(&word_yxy(), -i), (&family_b(i)?, -1), (&word_yxy(), i)])?;
        if lhs != rhs || gamma_eval(&lhs)? != gamma_eval(&rhs)? {
            return verdict(false, format!("b₋{i} ≠ (yxy)⁻{i}b_{i}⁻¹(yxy){i}"));
        }
    }
    let b_minus_one_is_x1_inverse = family_b(-1)? == xi(ctx, 1)?.inverse();
    verdict(
        b_minus_one_is_x1_inverse,
        "b₋ᵢ = (yxy)⁻ⁱbᵢ⁻¹(yxy)ⁱ for i = 1..5, and b₋₁ = x₁⁻¹",
    )
}

fn run_lem_a7_relations(_: &CheckContext, _: i64) -> Result<Outcome> {
    for i in 1..=5 {
        let b = family_b(-i)?;
        if !kernel_gamma(&b.pow(4))? {
            return verdict(false, format!("γ(b₋{i}⁴) ≠ 1"));
        }
        if !kernel_gamma(&comm(&b.pow(2), &word_yxy()))? {
            return verdict(false, format!("γ([b₋{i}², yxy]) ≠ 1"));
        }
    }
    verdict(true, "γ(b₋ᵢ⁴) = 1 and γ([b₋ᵢ², yxy]) = 1 for i = 1..5")
}

fn run_claim2(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let yxy_inv = word_yxy().inverse();
    for i in 0..=4 {
        // x-family recursion: (yxy)^-1 x_i (yxy) = x_i x_{i+1}^-1
        let lhs = xi(ctx, i)?.conjugated(&yxy_inv)?;
        let rhs = xi(ctx, i)?.concat(&xi(ctx, i + 1)?.inverse())?;
        if lhs != rhs || !claim2_x_conjugation(i, ctx.config().family_depth)? {
            return verdict(false, format!("(yxy)⁻¹x_{i}(yxy) ≠ x_{i}x_{}⁻¹", i + 1));
        }
    }
    for i in 1..=4 {
        // b-family recursion: (yxy)^-1 b_{-i} (yxy) = b_{-1}^-1 b_{-i-1}
        let lhs = family_b(-i)?.conjugated(&yxy_inv)?;
        let rhs = family_b(-1)?.inverse().concat(&family_b(-i - 1)?)?;
        if lhs != rhs || gamma_eval(&lhs)? != gamma_eval(&rhs)? {
            return verdict(false, format!("(yxy)⁻¹b₋{i}(yxy) ≠ b₋₁⁻¹b₋{}", i + 1));
        }
    }
    verdict(
        true,
        "both recursions hold freely and projectively for i ≤ 4",
    )
}

// ---- claim 3 ---------------------------------------------------------------

fn run_claim3_eq19(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let yxy = word_yxy();
    let mut count = 0;
    for big_n in 0..=3i64 {
        for i in 0..=big_n {
            let xn = xi(ctx, big_n)?;
            let lhs = comm(&xi(ctx, i)?, &xi(ctx, big_n + 1)?);
            let mut middle = GroupWord::empty();
            for idx in (i..big_n).rev() {
                middle = middle.concat(&xi(ctx, idx)?.inverse())?;
            }
            let rhs = GroupWord::compose(&[
                (&comm(&xi(ctx, i)?, &xn), 1),
                (&xn, -2),
                (&yxy, -1),
                (&middle, 1),
                (&xn, 1),
                (&yxy, 1),
                (&xi(ctx, i)?, 1),
                (&xi(ctx, big_n + 1)?, 1),
            ])?;
            if lhs != rhs {
                return verdict(false, format!("expansion fails at (i, N) = ({i}, {big_n})"));
            }
            count += 1;
        }
    }
    verdict(
        true,
        format!("commutator expansion is a free-word identity ({count} instances, N ≤ 3)"),
    )
}

/// Projective subgroup generated by x_0^2 .. x_m^2.
fn squares_subgroup(ctx: &CheckContext, m: i64) -> Result<FiniteGroupTable> {
    let mut gens = Vec::new();
    for j in 0..=m {
        gens.push(gamma_eval(&xi(ctx, j)?.pow(2))?);
    }
    FiniteGroupTable::closure(&gens, 1 << 12)
}

fn run_claim3_eq20(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let mut count = 0;
    for big_n in 0..=3i64 {
        let subgroup = squares_subgroup(ctx, big_n)?;
        for i in 0..=big_n {
            let word =
                comm(&xi(ctx, i)?, &xi(ctx, big_n + 1)?).concat(&xi(ctx, big_n + 1)?.pow(-2))?;
            if subgroup.position_of(&gamma_eval(&word)?).is_none() {
                return verdict(
                    false,
                    format!(
                        "[x_{i}, x_{}]x_{}⁻² ∉ ⟨x₀²,…,x_{big_n}²⟩",
                        big_n + 1,
                        big_n + 1
                    ),
                );
            }
            count += 1;
        }
    }
    verdict(
        true,
        format!("[xᵢ, x_N₊₁]x_N₊₁⁻² lands in ⟨x₀², …, x_N²⟩ ({count} instances)"),
    )
}

fn run_claim3_commutation(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let mats: Vec<Mat3<LaurentF2>> = (0..=4)
        .map(|i| eval_braid::<LaurentF2>(&xi(ctx, i)?))
        .collect::<Result<_>>()?;
    for (i, a) in mats.iter().enumerate() {
        let a2 = a.mul(a);
        for (j, b) in mats.iter().enumerate() {
            let b2 = b.mul(b);
            if !proj_eq(&a2.mul(b), &b.mul(&a2))? {
                return verdict(false, format!("[x_{i}², x_{j}] ≠ 1 projectively"));
            }
            if !proj_eq(&a2.mul(&b2), &b2.mul(&a2))? {
                return verdict(false, format!("[x_{i}², x_{j}²] ≠ 1 projectively"));
            }
        }
    }
    verdict(
        true,
        "[xᵢ², xⱼ] and [xᵢ², xⱼ²] vanish projectively for i, j ≤ 4",
    )
}

fn run_claim3_membership(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let subgroups: Vec<FiniteGroupTable> = (0..=4)
        .map(|m| squares_subgroup(ctx, m))
        .collect::<Result<_>>()?;
    for i in 0..=4i64 {
        for j in 0..=4i64 {
            let c = gamma_eval(&comm(&xi(ctx, i)?, &xi(ctx, j)?))?;
            let m = i.max(j) as usize;
            if subgroups[m].position_of(&c).is_none() {
                return verdict(false, format!("[x_{i}, x_{j}] ∉ ⟨x₀²,…,x_{m}²⟩"));
            }
        }
    }
    verdict(
        true,
        "[xᵢ, xⱼ] ∈ ⟨x₀², …, x_max(i,j)²⟩ projectively for i, j ≤ 4",
    )
}

// ---- negative controls -----------------------------------------------------

fn run_neg_kernel(_: &CheckContext, _: i64) -> Result<Outcome> {
    let sigma1_nontrivial = !kernel_mod2(&braid(&[1]))?;
    let x_not_scalar = !eval_braid::<LaurentF2>(&word_x())?.is_scalar();
    let x4 = word_x().pow(4);
    let x4_gamma_only = kernel_gamma(&x4)? && !kernel_mod2(&x4)?;
    verdict(
        sigma1_nontrivial && x_not_scalar && x4_gamma_only,
        "σ₁ ∉ ker(β₄⊗F₂); x is not scalar; x⁴ ∈ ker γ but x⁴ ∉ ker(β₄⊗F₂)",
    )
}

fn run_neg_corrupted(ctx: &CheckContext, _: i64) -> Result<Outcome> {
    let table = ctx.stab7(0)?;
    let assignment = xa_assignment(&table, 0)?;
    let bogus = vec![Relation {
        label: "x^3 = 1".into(),
        lhs: GroupWord::gen(Letter::Named(0)).pow(3),
        rhs: GroupWord::empty(),
    }];
    let report = check_relations(&table, &assignment, &bogus)?;
    verdict(
        !report.all_pass(),
        "the deliberately corrupted relation x³ = 1 fails on Stab(7⁽⁰⁾)",
    )
}

// ---- the table -------------------------------------------------------------

pub(super) fn build() -> Vec<CheckDef> {
    let mut reg = vec![
        CheckDef::new(
            "golden.matrices",
            "Appendix A: \"here are the matrix representations of x, y, and yxy\"",
            0,
            run_golden_matrices,
        ),
        CheckDef::new(
            "burau.relations",
            "§1: \"reduced Burau representation β₄: B₄ → GL(3, ℤ[t,t⁻¹])\"",
            0,
            run_braid_relations,
        ),
        CheckDef::new("eq1", "Eq. (1): \"β₄(Δ²) = t⁴I₃ ∈ ker p\"", 0, run_eq1),
        CheckDef::new(
            "pres.b4",
            "§1: \"B₄ ≅ ⟨x, y | 1 = x⁴y⁻³ = [x², yxy]⟩\"",
            0,
            run_pres_b4,
        ),
        CheckDef::new(
            "pres.q4",
            "§1: \"Q₄ ≅ ⟨x, y | 1 = x⁴ = y³ = [x², yxy]⟩\"",
            0,
            run_pres_q4,
        ),
        CheckDef::new("eq7", "Eq. (7): \"x⁴ = Δ² = y³\"", 0, run_eq7),
        CheckDef::new(
            "remark.det-t3",
            "Remark after Lemma 3.2: \"a nontrivial determinant t³\"",
            0,
            run_det_t3,
        ),
        CheckDef::new(
            "cor1.2.word",
            "Corollary 1.2 proof: \"Temporarily define δ := txt⁻¹, α := [yxy,x]tx⁻¹t⁻¹\"",
            0,
            run_cor12_word,
        ),
        CheckDef::new(
            "cor1.2.nontrivial",
            "Corollary 1.2 proof: \"computing the images of determinant 1\"",
            0,
            run_cor12_nontrivial,
        ),
    ];
    for i in 1..=4 {
        reg.push(CheckDef::new(
            format!("lem3.2.kernel.i{i}"),
            "Lemma 3.2: \"1 = xᵢ⁴ = [xᵢ², yxy], i = 1, 2, ⋯\"",
            i,
            run_lem32_kernel,
        ));
    }
    for i in 0..=4 {
        reg.push(CheckDef::new(
            format!("lem2.2.kernel.i{i}"),
            "Lemma 2.2: \"1 = xᵢ⁴, for each integer i ≥ 0\"",
            i,
            run_lem22_kernel,
        ));
    }
    reg.extend([
        CheckDef::new(
            "lem2.3.eq4",
            "Lemma 2.3 proof / Eq. (4): \"MxM⁻¹ = t[yxy,x], M(yxy)M⁻¹ = yxy\"",
            0,
            run_eq4,
        ),
        CheckDef::new(
            "mf.det",
            "Remark on M_f: \"M_f is always invertible, since det M_f = t²\"",
            0,
            run_mf_det,
        ),
        CheckDef::new(
            "mf.eq4",
            "Remark on M_f: \"the matrix M_f ∈ GL(3, F₂(t)) … satisfies the relation\"",
            0,
            run_mf_eq4,
        ),
        CheckDef::new(
            "eq5.powers",
            "Eq. (5): \"tʲ⁻ⁱxᵢtⁱ⁻ʲ = xⱼ\"",
            0,
            run_eq5_powers,
        ),
        CheckDef::new(
            "lem3.4",
            "Lemma 3.4 proof: \"Mx₁M⁻¹ = [yxy, x₁]\"",
            0,
            run_lem34,
        ),
        CheckDef::new(
            "lamplighter.windows",
            "Remark after Lemma 2.1: \"the subgroup ⟨xᵢ², t⟩ of Gᵢ is isomorphic to L\"",
            0,
            run_lamplighter,
        ),
    ]);
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("stab7.order.n{n}"),
            "Lemma A.3: \"1 → E_{2^{n+2}} → Stab(7⁽ⁿ⁾) → E_{2^{n+2}} → 1\"",
            n,
            run_stab_order,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.3.center.n{n}"),
            "Lemma A.3: \"The center of Stab(7⁽ⁿ⁾) is generated by x², b₁², ⋯, b_{n+1}², and isomorphic to E_{2^{n+2}}\"",
            n,
            run_center,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.3.exponent.n{n}"),
            "Lemma A.3: \"g² belongs to the center, and the exponent of Stab(7⁽ⁿ⁾) is 4\"",
            n,
            run_exponent,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("thmA.4.derived.n{n}"),
            "Theorem A.4: \"The derived subgroup of Stab(7⁽ⁿ⁾) is generated by b₁², ⋯, b_{n+1}², and isomorphic to E_{2^{n+1}}\"",
            n,
            run_derived,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("thmA.4.class.n{n}"),
            "Theorem A.4: \"Stab(7⁽ⁿ⁾) is nilpotent of class 2 for each n ≥ 0\"",
            n,
            run_class,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.3.normal-form.n{n}"),
            "Lemma A.3 proof: \"g = C(g)x^{i₀}b₁^{i₁}b₂^{i₂}⋯b_{n+1}^{i_{n+1}}\"",
            n,
            run_normal_form,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("thmA.1.relations.n{n}"),
            "Theorem A.1: \"x² = a₀² = ⋯ = aₙ²\", \"(xaᵢ)⁴ = 1\", \"[x, aᵢ] = [aₖ₋₁, aᵢ₊ₖ]\"",
            n,
            run_thm_a1,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.2.relations.n{n}"),
            "Lemma A.2: \"[x, bᵢ] = bᵢ²\", \"[bᵢ, bⱼ] = bᵢ²b_{j−i}²bⱼ²\"",
            n,
            run_lem_a2,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.3.eqs12-14.n{n}"),
            "Lemma A.2 proof, Eqs. (12)–(14): \"x⁻¹bᵢ⁻¹ = bᵢx⁻¹\", \"[x², bᵢ] = 1\", \"[x, bᵢ²] = 1\"",
            n,
            run_eqs_12_14,
        ));
    }
    for n in 0..=3 {
        reg.push(CheckDef::new(
            format!("lemA.3.claim1.n{n}"),
            "Claim 1, Eqs. (15)–(17): \"(bᵢb_{N+2}⁻¹)² = b_{N−i+2}²\"",
            n,
            run_claim1,
        ));
    }
    reg.extend([
        CheckDef::new(
            "lemA.6.relations",
            "Lemma A.6: \"1 = [x², yxy] = [bᵢ², yxy]\"",
            0,
            run_lem_a6_relations,
        ),
        CheckDef::new(
            "lemA.6.eq18",
            "Lemma A.6 proof, Eq. (18): \"(yxy)bᵢ(yxy)⁻¹ = … = b₁⁻¹bᵢ₊₁\"",
            0,
            run_lem_a6_eq18,
        ),
        CheckDef::new(
            "lemA.7.identity",
            "Lemma A.7 proof: \"b₋ᵢ = (yxy)⁻ⁱbᵢ⁻¹(yxy)ⁱ\"",
            0,
            run_lem_a7_identity,
        ),
        CheckDef::new(
            "lemA.7.relations",
            "Lemma A.7: \"1 = x⁴ = b₋ᵢ⁴\", \"1 = [x², yxy] = [b₋ᵢ², yxy]\"",
            0,
            run_lem_a7_relations,
        ),
        CheckDef::new(
            "claim2.recursions",
            "Claim 2 proof: \"(yxy)⁻¹b₋ᵢ(yxy) = (xb₋₁)⁻¹(xb₋ᵢ₋₁)\" and \"(yxy)⁻¹xᵢ(yxy) = xᵢxᵢ₊₁⁻¹\"",
            0,
            run_claim2,
        ),
        CheckDef::new(
            "claim3.eq19",
            "Claim 3 proof, Eq. (19): \"[xᵢ, x_{N+1}] = [xᵢ, x_N]x_N⁻²(yxy)⁻¹(x_{N−1}⁻¹⋯xᵢ⁻¹)x_N(yxy)xᵢx_{N+1}\"",
            0,
            run_claim3_eq19,
        ),
        CheckDef::new(
            "claim3.eq20",
            "Claim 3 proof, Eq. (20): \"[xᵢ, x_{N+1}] = C_N(yxy)⁻¹(x_N⁻¹x_{N−1}⁻¹⋯xᵢ⁻¹)(yxy)xᵢx_{N+1}\" with C_N ∈ ⟨x₀², …, x_N²⟩",
            0,
            run_claim3_eq20,
        ),
        CheckDef::new(
            "claim3.eq21-22",
            "Claim 3 proof, Eqs. (21)–(22): \"[x_{N+1}, xᵢ²] = 1 = [xᵢ², x_{N+1}²]\", \"[x_{N+1}², xᵢ] = 1\"",
            0,
            run_claim3_commutation,
        ),
        CheckDef::new(
            "claim3.membership",
            "Claim 3: \"[xᵢ, xⱼ] ∈ ⟨x₀², x₁², ⋯, xⱼ²⟩\"",
            0,
            run_claim3_membership,
        ),
        CheckDef::new(
            "neg.kernel-controls",
            "Theorem 1.3 (\"The kernel of the representation β₄⊗F₂\") and Eq. (7) (\"x⁴ = Δ² = y³\"): negative controls",
            0,
            run_neg_kernel,
        ),
        CheckDef::new(
            "neg.corrupted-relation",
            "Theorem A.1: \"1 = x⁴\" (x has order 4, so the corrupted relation x³ = 1 must fail)",
            0,
            run_neg_corrupted,
        ),
    ]);
    reg
}
