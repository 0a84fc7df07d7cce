import logging

from octahedral.suites import SUITES, run_suite

logger = logging.getLogger(__name__)

get_suite_definition = {
    "name": "get_suite",
    "description": "Run a verification suite and return its versioned JSON report.",
    "parameters": {
        "type": "object",
        "properties": {
            "name": {
                "type": "string",
                "description": "One of: " + ", ".join(list(SUITES) + ["all"]) + "."
            }
        },
        "required": ["name"]
    }
}


def get_suite(name: str) -> dict:
    """
    Runs the named suite.

    - exit_code mirrors the command line: 0 all pass, 1 a check failed, 2 unknown suite
    """
    logger.info("Running verification suite %s", name)
    if not name:
        raise ValueError("name is required")
    report, code = run_suite(name)
    result = report.to_json()
    result["exit_code"] = code
    return result
