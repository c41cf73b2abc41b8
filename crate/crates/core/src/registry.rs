//! Human-readable statement of every check id.

/// The statement a check id verifies. Ids with a `perturbed_` prefix
/// refer to the same statement on the perturbed connection, and
/// `parallel_field_<label>_*` ids to one `∇`-parallel vector field `V`.
pub fn reference(id: &str) -> String {
    if let Some(rest) = id.strip_prefix("perturbed_") {
        return format!("{} (perturbed connection)", reference(rest));
    }
    if let Some(rest) = id.strip_prefix("parallel_field_") {
        let name = rest.split_once('_').map_or(rest, |(_, n)| n);
        return parallel_field(name).to_string();
    }
    statement(id).to_string()
}

fn parallel_field(name: &str) -> &'static str {
    match name {
        "killing" => "L_V g = 0",
        "j_parallel" => "∇(JV) = 0",
        "lie_expansion" => "L_V = ∇_V + (V⌟T) acting on F, Ψ⁺, T",
        "dtheta" => "dθ = θ⌟T for parallel θ on closed ACYT",
        "lie_f" => "L_V F = 0",
        "lie_j" => "L_V J = 0",
        "lie_psi_plus" => "L_V Ψ⁺ = 0",
        "lie_psi_minus" => "L_V Ψ⁻ = 0",
        "lie_n" => "L_V N = 0",
        "lie_psi_formula" => "L_V Ψ^± = cyclic sum of dθ_{is}Ψ^±_{sjk}",
        _ => "",
    }
}

fn statement(id: &str) -> &'static str {
    match id {
        // core
        "structure_jacobi" => "Jacobi identity of the structure constants",
        "structure_d_squared" => "d² = 0 on left-invariant 1-forms",
        "j_squared" => "J² = -1",
        "j_orthogonal" => "g(J·, J·) = g",
        "f_wedge_psi_plus" => "F ∧ Ψ⁺ = 0",
        "f_wedge_psi_minus" => "F ∧ Ψ⁻ = 0",
        "psi_plus_wedge_psi_minus" => "Ψ⁺ ∧ Ψ⁻ = -⅔ F³",

        // su3
        "phi_expansion" => "Φ_{jslm} = F_{js}F_{lm} + F_{sl}F_{jm} + F_{lj}F_{sm}",
        "psi_plus_trace_f" => "Ψ⁺_{ipq}F_{pq} = 0",
        "psi_minus_trace_f" => "Ψ⁻_{ipq}F_{pq} = 0",
        "phi_trace_psi_plus" => "Φ_{ijkl}Ψ⁺_{jkl} = 0",
        "phi_trace_psi_minus" => "Φ_{ijkl}Ψ⁻_{jkl} = 0",
        "f_squared" => "F_{ip}F_{pj} = -δ_{ij}",
        "psi_plus_f" => "Ψ⁺_{ijs}F_{sk} = -Ψ⁻_{ijk}",
        "psi_minus_f" => "Ψ⁻_{ijs}F_{sk} = Ψ⁺_{ijk}",
        "psi_plus_psi_minus" => "Ψ⁺_{ipq}Ψ⁻_{jpq} = -4F_{ij}",
        "psi_plus_psi_plus" => "Ψ⁺_{ipq}Ψ⁺_{jpq} = 4δ_{ij}",
        "psi_minus_psi_minus" => "Ψ⁻_{ipq}Ψ⁻_{jpq} = 4δ_{ij}",
        "psi_plus_psi_minus_4" => "Ψ⁺_{kls}Ψ⁻_{ijs} in terms of δ and F",
        "psi_plus_psi_plus_4" => "Ψ⁺_{kls}Ψ⁺_{ijs} in terms of δ and F",
        "phi_f" => "Φ_{ijkl}F_{kl} = 4F_{ij}",
        "phi_psi_plus" => "Φ_{ijkl}Ψ⁺_{klp} = 2Ψ⁺_{ijp}",
        "phi_psi_minus" => "Φ_{ijkl}Ψ⁻_{klp} = 2Ψ⁻_{ijp}",
        "phi_psi_plus_5" => "Φ_{ijkl}Ψ⁺_{lqp} = -cyclic F_{ij}Ψ⁻_{pqk}",
        "phi_psi_minus_5" => "Φ_{ijkl}Ψ⁻_{lqp} = cyclic F_{ij}Ψ⁺_{pqk}",
        "phi_phi" => "Φ_{ijkl}Φ_{rjkl} = 12δ_{ir}",
        "phi_phi_4" => "Φ_{ijkl}Φ_{klqr} = 2(F_{ij}F_{qr} - δ_{jq}δ_{ir} + δ_{iq}δ_{jr})",
        "star_phi" => "*Φ = -F",
        "star_f" => "*F = -Φ",
        "star_psi_plus" => "*Ψ⁺ = Ψ⁻",
        "star_psi_minus" => "*Ψ⁻ = -Ψ⁺",
        "star_alpha_f" => "*(α ∧ F) = -α⌟Φ",
        "star_alpha_phi" => "*(α ∧ Φ) = Jα",
        "j_alpha_f" => "Jα = -α⌟F",
        "star_alpha_psi_plus" => "*(α ∧ Ψ⁺) = -α⌟Ψ⁻",
        "star_alpha_psi_minus" => "*(α ∧ Ψ⁻) = α⌟Ψ⁺",
        "star_beta_psi_plus" => "*(β ∧ Ψ⁺) = ½β_{ij}Ψ⁻_{ijk}",
        "star_beta_psi_minus" => "*(β ∧ Ψ⁻) = -½β_{ij}Ψ⁺_{ijk}",
        "lambda2_projector_ranks" => "Λ² = Λ²₁ ⊕ Λ²₆ ⊕ Λ²₈ with ranks (1, 6, 8)",
        "lambda3_projector_ranks" => "Λ³ = Λ³₁ ⊕ Λ³₁ ⊕ Λ³₆ ⊕ Λ³₁₂ with ranks (1, 1, 6, 12)",
        "four_form_kernel_rank" => {
            "the linear map behind the 4-form vanishing criterion has rank 15"
        }
        "gamma_roundtrip" => "γ⁻¹(γ(h)) = h on S²₋",

        // geometry
        "nijenhuis_totally_skew" => "N is a 3-form (class G₁)",
        "connection_torsion_equals_t" => "torsion of ∇ = ∇ᵍ + ½T equals T",
        "nabla_g" => "∇g = 0",
        "nabla_f" => "∇F = 0",
        "nabla_psi" => "∇Ψ⁺ = ∇Ψ⁻ = 0",
        "torsion_via_df_plus" => "T = -dF⁺(J·,J·,J·) + ¼N",
        "df_plus_mixed_type" => "dF⁺ has type (2,1)+(1,2)",
        "df_plus_norm_identity" => "norm identity for the mixed part dF⁺",
        "df_minus_j_slot_invariance" => "dF⁻(J·,·,·) = dF⁻(·,J·,·) = dF⁻(·,·,J·)",
        "lee_form_phi_trace" => "θ = ⅙ T_{jkl}Φ_{jkli}",
        "lee_form_codifferential" => "θ = (δF)∘J",
        "lee_form_j_trace" => "θ(J·) = -½ T(·, e_j, e_k)F_{jk}",
        "torsion_star_formula" => "T from dF, θ, λ, μ via the Hodge star",
        "torsion_phi_formula" => "T from dF, θ, λ, μ via contraction with Φ",
        "torsion_j_formula" => "T = JdF + θ terms + λΨ⁺ + μΨ⁻",
        "lambda_mu_from_torsion" => "λ = ⅙(T, Ψ⁺), μ = ⅙(T, Ψ⁻)",
        "nijenhuis_psi_expansion" => "N = λΨ⁺ + μΨ⁻ and ‖N‖² = 24(λ² + μ²)",
        "psi_differentials" => "dΨ^± = θ ∧ Ψ^± - ¼(N, Ψ^±)*F",
        "dtheta_j_invariant" => "dθ is J-invariant",
        "lambda_mu_holomorphic" => "dμ = J dλ",
        "df_match" => "dF equals the declared value",
        "nijenhuis_match" => "N equals the declared value",
        "torsion_match" => "T equals the declared value",
        "lee_form_match" => "θ equals the declared value",
        "lambda_match" => "λ equals the declared value",
        "mu_match" => "μ equals the declared value",
        "tor1_connection_match" => {
            "coefficients of the torsion connection equal the declared essential terms"
        }

        // curvature
        "curvature_antisymmetry" => "R_{ijkl} = -R_{jikl} = -R_{ijlk}",
        "sigma_t_components" => "σᵀ = ½Σ(e_j⌟T)∧(e_j⌟T) in components",
        "dt_expansion" => "dT = cyclic ∇T - ∇T(last slot) + 2σᵀ",
        "first_bianchi" => "b(R) = dT - σᵀ + ∇T",
        "first_bianchi_dual" => "cyclic sum of R with the first slot fixed = -½dT + ∇T",
        "levi_civita_derivative_of_t" => "∇ᵍT = ∇T + ½σᵀ",
        "codifferential_of_t" => "δT = -tr ∇ᵍT",
        "ricci_relation" => "Ricᵍ = Ric + ½δT + ¼T²",
        "scalar_curvature_relation" => "Scalᵍ = Scal + ¼‖T‖²",
        "ricci_skew_part" => "Ric(X,Y) - Ric(Y,X) = -δT(X,Y)",
        "lemma_4form" => "∇T skew ⇔ R ∈ S²Λ² ⇔ dT = 4∇ᵍT",
        "tfbi" => "Riemannian Bianchi identity ⇔ dT = -2∇T = ⅔σᵀ",
        "codifferential_of_lee_form" => "δθ = -tr ∇θ",
        "ricci_form" => "Ricci form of ∇ from Ric, ∇θ and dT",
        "su3_ricci_condition" => "Ric + ∇θ = ¼ dT(·, J·, ·, J·) trace",
        "holonomy_su3_forms" => "R(X,Y) annihilates F, Ψ⁺ and Ψ⁻",
        "holonomy_su3_phi" => "R_{ijab}Φ_{abkl} = -2R_{ijkl}",
        "dt_trace_nabla_theta" => "double J-trace of dT via ∇θ, ‖θ‖² and T",
        "dt_trace_df_plus" => "double J-trace of dT via δθ, ‖θ‖², ‖dF⁺‖², ‖N‖²",
        "dt_trace_torsion" => "double J-trace of dT via δθ, ‖θ‖², ‖T‖², ‖N‖²",
        "scalar_curvature_formula" => "Scal = 3δθ + 2‖θ‖² - ⅓‖dF⁺‖² + 1/16‖N‖²",
        "riemannian_scalar_formula_as_printed" => "Scalᵍ = 3δθ + 2‖θ‖² - ⅓‖dF⁺‖² + 5/64‖N‖²",
        "riemannian_scalar_formula" => "Scalᵍ = 3δθ + 2‖θ‖² - 1/12‖dF⁺‖² + 5/64‖N‖²",
        "torsion_norm_split" => "‖T‖² = ‖dF⁺‖² + 1/16‖N‖²",
        "ricci_from_dt" => "Ric = 1/12 dT_{iabc}Φ_{jabc} - ∇θ",
        "ricci_from_curvature_phi" => "Ric = ½ R_{iabc}Φ_{jabc}",
        "ricci_from_dt_nabla_t" => "Ric = 1/12 dT·Φ + ⅙ ∇T·Φ",
        "dt_psi_traces" => "⅙ dT_{iabc}Ψ^±_{abc} + ⅓ ∇_iT_{abc}Ψ^±_{abc} = 0",
        "dt_match" => "dT equals the declared value",
        "ricci_match" => "Ric equals the declared multiple of g",
        "riemannian_bianchi_match" => "Riemannian Bianchi identity as declared",
        "pair_symmetry_match" => "R ∈ S²Λ² as declared",
        "torsion_parallel_match" => "∇T = 0 as declared",
        "lemma_4form_match" => "value of the 4-form equivalence as declared",
        "tfbi_match" => "value of the Bianchi equivalence as declared",
        "levi_civita_holonomy_su3_match" => "Levi-Civita curvature in su(3) as declared",

        // theorem
        "lemma_4form_equivalence" => "∇T skew, R ∈ S²Λ² and dT = 4∇ᵍT agree",
        "tfbi_equivalence" => "Riemannian Bianchi identity and dT = -2∇T = ⅔σᵀ agree",
        "rb_implies_kahler_like_ricci" => {
            "RB ⇒ R ∈ S²Λ², Ric symmetric, J-invariant, equal to the Ricci form"
        }
        "acyt_iff_psi_conditions" => "∇Ψ^± = 0 ⇔ dΨ^± = θ∧Ψ^± - ¼(N,Ψ^±)*F",
        "s2l2_implies_parallel_torsion" => {
            "ACYT, R ∈ S²Λ², Ric = 0 ⇒ ∇T = ∇ᵍT = ∇N = ∇dF = 0, RB, dT = δT = 0"
        }
        "parallel_torsion_implies_s2l2" => "ACYT, ∇T = ∇ᵍT = 0 ⇒ R ∈ S²Λ², Ric = 0",
        "acyt_rb_implies_s2l2" => "ACYT with RB ⇒ R ∈ S²Λ², Ric = 0",
        "acyt_lee_form_type" => "ACYT ⇒ dθ J-invariant and ∇N = 0",
        "closed_lee_form_parallel_n" => "ACYT, dθ = 0 ⇒ ∇N = 0",
        "balanced_coclosed" => "ACYT, θ = 0 ⇒ ∇N = 0, δT = 0, Ric symmetric",
        "balanced_ricci_flat_iff_harmonic" => "ACYT, θ = 0: Ric = 0 ⇔ dT = δT = 0",
        "closed_torsion_iff_ricci_nabla_theta" => "ACYT: dT = 0 ⇔ dθ ∈ su(3) and Ric = -∇θ",
        "parallel_n_ricci_nabla_theta_implies_closed" => "ACYT, ∇N = 0, Ric = -∇θ ⇒ dT = 0",
        "pair_symmetry_j_theta_killing" => {
            "ACYT, R ∈ S²Λ² ⇒ Jθ Killing, ∇N = 0, ∇θ symmetric and J-invariant"
        }
        "pair_symmetry_balanced_parallel" => {
            "ACYT, R ∈ S²Λ², θ = 0 ⇒ ∇T = ∇dF = ∇N = 0 and Scalᵍ formula"
        }
        "balanced_scalar_flat_norms" => "ACYT, θ = 0, Scal = 0 ⇒ 16‖dF⁺‖² = 3‖N‖²",
        "balanced_ricci_flat_norms" => "ACYT, θ = 0, Ric = 0 ⇒ 16‖dF⁺‖² = 3‖N‖² and dT(·,·,F) = 0",

        // soliton
        "second_bianchi" => "contracted second Bianchi identity of ∇",
        "codifferential_divergence" => "div δT = ½ dT·T",
        "soliton_metric" => "Ricᵍ - ¼T² + ½L_X g = 0",
        "soliton_codifferential" => "δT = -X⌟T, or δT = B",
        "soliton_b_closed" => "d(B + X⌟T) = 0",
        "soliton_closed_torsion" => "dT = 0",
        "gradient_df_closed" => "d(df) = 0",
        "gradient_ricci" => "Ric = -∇df",
        "gradient_codifferential" => "δT = -df⌟T",
        _ => "",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes_resolve() {
        assert_eq!(
            reference("perturbed_tfbi"),
            format!("{} (perturbed connection)", reference("tfbi"))
        );
        assert_eq!(reference("parallel_field_lee_lie_f"), "L_V F = 0");
        assert_eq!(reference("parallel_field_3_killing"), "L_V g = 0");
    }
}
