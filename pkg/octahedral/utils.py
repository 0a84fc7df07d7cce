import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)


class WorkbenchError(Exception):
    """Wraps verification and construction failures with a kind and message."""
    def __init__(self, kind: str, message: str):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.detail = message


class ClosureBudgetExceeded(WorkbenchError):
    def __init__(self, cap: int):
        super().__init__("closure-budget-exceeded", f"closure passed {cap} elements")
        self.cap = cap


class NotNormalError(WorkbenchError):
    def __init__(self, message: str):
        super().__init__("not-normal", message)


class PrimeUnsuitableError(WorkbenchError):
    def __init__(self, prime: int, message: str):
        super().__init__("prime-unsuitable", f"p = {prime}: {message}")
        self.prime = prime


class UnsupportedGroupError(WorkbenchError):
    def __init__(self, message: str):
        super().__init__("unsupported-group", message)


class NonCharacterError(WorkbenchError):
    def __init__(self, message: str):
        super().__init__("non-character", message)


class HomomorphismViolation(WorkbenchError):
    """Raised with the offending (element, generator) pair as display words."""
    def __init__(self, left: str, right: str, label: str = ""):
        where = f" in {label}" if label else ""
        super().__init__(
            "homomorphism-violation",
            f"image({left}*{right}) != image({left})*image({right}){where}",
        )
        self.pair = (left, right)


class RelationFailure(WorkbenchError):
    def __init__(self, left: str, right: str, message: str = ""):
        super().__init__("relation-failure", f"({left}, {right}) {message}".strip())
        self.pair = (left, right)


class AliasError(WorkbenchError):
    def __init__(self, message: str):
        super().__init__("alias", message)


class ExprParseError(WorkbenchError):
    def __init__(self, position: int, expected: list[str], text: str = ""):
        wanted = ", ".join(expected) if expected else "end of input"
        super().__init__("parse", f"at position {position}: expected {wanted}")
        self.position = position
        self.expected = expected
        self.text = text


class UnknownNameError(WorkbenchError):
    def __init__(self, name: str, valid: list[str]):
        super().__init__("unknown-name", f"{name!r} is not one of {', '.join(valid)}")
        self.name = name
        self.valid = valid


@dataclass
class Settings:
    prime: int
    closure_cap: int
    report_format: str
    log_level: str


# Load workbench settings once; CLI flags override them through configure()
settings = Settings(
    prime=int(os.getenv("WORKBENCH_PRIME", "73")),
    closure_cap=int(os.getenv("WORKBENCH_CLOSURE_CAP", "10000")),
    report_format=os.getenv("WORKBENCH_FORMAT", "md").lower(),
    log_level=os.getenv("WORKBENCH_LOG_LEVEL", "WARNING").upper(),
)

if settings.report_format not in ("md", "json"):
    raise EnvironmentError("WORKBENCH_FORMAT must be md or json")


def configure(prime: int = None, closure_cap: int = None, log_level: str = None) -> Settings:
    """
    Overrides the environment-derived settings for this process.
    """
    if prime is not None:
        settings.prime = prime
    if closure_cap is not None:
        if closure_cap < 1:
            raise ValueError("closure_cap must be positive")
        settings.closure_cap = closure_cap
    if log_level is not None:
        settings.log_level = log_level.upper()
    logger.debug("settings now %s", settings)
    return settings


def setup_logging(level: str = None) -> None:
    """Send log records to stderr; stdout carries reports and the MCP transport."""
    logging.basicConfig(
        level=getattr(logging, (level or settings.log_level).upper(), logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
    )
