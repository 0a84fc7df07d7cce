import logging

from octahedral.reps import build_irrep, charge_assignment, hypercube_closures, reflection_eigenframe

logger = logging.getLogger(__name__)

get_hypercube_definition = {
    "name": "get_hypercube",
    "description": (
        "Closure orders of the 4x4 hypercube generators (w, jd), with left multiplications by i, j, k and "
        "with quaternion conjugation; also the reflection eigenframe of 2_0 and the charge assignment."
    ),
    "parameters": {
        "type": "object",
        "properties": {
            "closure_cap": {
                "type": "integer",
                "description": "Maximum closure size; the configured cap when omitted."
            }
        },
        "required": []
    }
}


def get_hypercube(closure_cap: int = None) -> dict:
    logger.info("Closing the hypercube generators")
    closures = [
        {"generators": name, "order": result.order, "signed_permutations": result.signed_permutations}
        for name, result in hypercube_closures(closure_cap)
    ]

    frame = reflection_eigenframe(build_irrep("2_0"))
    charges = charge_assignment(frame)
    return {
        "closures": closures,
        "eigenframe": {
            "plus": [[x.to_pretty() for x in v] for v in frame.plus],
            "minus": [[x.to_pretty() for x in v] for v in frame.minus],
            "plus_matches": frame.plus_matches,
            "minus_matches": frame.minus_matches,
            "orthogonal": frame.orthogonal,
        },
        "charges": {
            "first": [c.to_pretty() for c in charges.first],
            "second": [c.to_pretty() for c in charges.second],
            "scale": charges.scale.to_pretty(),
        },
    }
