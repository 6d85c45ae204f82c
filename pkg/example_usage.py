#!/usr/bin/env python3
"""
Example usage of the curvekit library.

This script walks through the extremal, completion, lift and surface modules programmatically.
"""
from src.checks import CheckManager
from src.completion import CompletionProblem, complete
from src.config import Config
from src.extremal import (
    ExtremalSpec,
    curvature_profile,
    curve_from_profile_quadrature,
    el_residual,
    first_integral_residual,
    shape_summary,
    theta_energy,
)
from src.lift import horizontality_residual, lift, sr_length
from src.surfaces import evolve, surface_metadata


def main():
    """Example usage of the curvekit modules."""
    print("curvekit - Example Usage\n")
    print("=" * 60)

    config = Config(None)
    checks = CheckManager(config.get_thresholds())

    # 1. Closed-form extremals
    print("\n1. Closed-form extremals:")
    print("-" * 60)
    for family, d in (("sinh", 2.0), ("cosh", 1.5), ("exp", 1.5)):
        spec = ExtremalSpec(1.0, d, family)
        profile = curvature_profile(spec, 2048)
        curve = curve_from_profile_quadrature(profile)
        shape = shape_summary(profile)
        print(f"   {family:<5} delta={profile.delta:.3f}  Theta_a={theta_energy(curve, spec.a):.4f}  "
              f"inflections={shape['kappa_sign_changes']}  vertices={shape['kappa_prime_sign_changes']}")
        for check in checks.check_all({"el": el_residual(profile), "first_integral": first_integral_residual(profile)}):
            print(f"      {check}")

    # 2. Curve completion
    print("\n2. Curve completion:")
    print("-" * 60)
    problem = CompletionProblem(p=(0, 0), q=(1, 0), theta0=0.5, theta1=0.3, a=1.0, nodes=64)
    fill, report = complete(problem)
    print(f"   Iterations: {report.iterations}  converged: {report.converged}")
    print(f"   Energy: {report.energy_history[0]:.6f} -> {report.final_energy:.6f}")
    print(f"   Fitted delta: {report.fitted_delta}  residual: {report.first_integral_residual}")

    # 3. Horizontal lift
    print("\n3. Horizontal lift:")
    print("-" * 60)
    lifted = lift(fill)
    print(f"   Horizontality residual: {horizontality_residual(lifted):.2e}")
    print(f"   Sub-Riemannian length: {sr_length(lifted, problem.a):.6f}")

    # 4. Pseudosphere
    print("\n4. Pseudosphere:")
    print("-" * 60)
    meta = surface_metadata(evolve(ExtremalSpec(1.0, 1.5, "exp"), 2048, 32))
    print(f"   Type: {meta['surface_type']}  K target: {meta['K_target']}")
    print(f"   Max relative K error: {meta['K_measured_max_err']:.2e}")
    print(f"   r_max {meta['r_max']:.4f} < r_bound {meta['r_bound']:.4f}")

    print("\n" + "=" * 60)
    print("Example completed successfully!")


if __name__ == "__main__":
    main()
