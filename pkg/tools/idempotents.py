import logging

from octahedral import algebra

logger = logging.getLogger(__name__)

get_idempotents_definition = {
    "name": "get_idempotents",
    "description": (
        "Group-algebra checks: lepton idempotents p, q, r in K and the M2 isomorphism, the displayed "
        "fermionic projectors against central idempotents, and the complex structure on the 2+/2- block."
    ),
    "parameters": {
        "type": "object",
        "properties": {
            "sign": {
                "type": "integer",
                "description": "Sign of the complex structure, 1 or -1.",
                "default": 1
            }
        },
        "required": []
    }
}


def get_idempotents(sign: int = 1) -> dict:
    """
    Runs the idempotent computations by exact convolution in Q(zeta_24)[G].

    - coefficients are serialised as 8 comma-separated rationals
    - a scale of null means the displayed element is not a multiple of its target
    """
    logger.info("Computing idempotents (sign %+d)", sign)
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    leptons = algebra.lepton_idempotents()
    iso = algebra.lepton_m2_isomorphism()
    return {
        "leptons": {
            "group": leptons.group.name,
            "elements": {name: getattr(leptons, name).terms_json() for name in ("p", "q", "r")},
            "checks": [{"property": c.name, "pass": c.passed} for c in leptons.checks],
            "m2_checks": [{"property": c.name, "pass": c.passed} for c in iso.checks],
        },
        "projectors": [p.to_json() for p in algebra.projector_report()],
        "complex_structure": algebra.complex_structure_check(sign).to_json(),
    }
