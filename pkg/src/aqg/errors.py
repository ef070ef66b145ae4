"""Error types and the exit-code table used by the command line."""

EXIT_CODES = {
    "OK": 0,
    "VERIFICATION_FAILED": 1,
    "USAGE": 2,
    "PARSE_ERROR": 3,
    "SCHEMA_ERROR": 4,
    "AXIOM_ERROR": 5,
    "NO_COUNIT": 6,
    "NON_UNIQUE": 7,
    "NO_ANTIPODE": 8,
    "SINGULAR_ANTIPODE": 9,
    "NO_HAAR": 10,
    "NON_UNIQUE_HAAR": 11,
    "NOT_FAITHFUL": 12,
    "POSITIVITY_REQUIRED": 13,
    "INCONSISTENT_DELTA": 14,
    "SINGULAR_SYSTEM": 15,
    "SINGULAR_PAIRING": 16,
    "NOT_COREP": 17,
    "NOT_STAR_HOM": 18,
    "NOT_INTERTWINING": 19,
    "NOT_RELATIVELY_INVARIANT": 20,
    "NOT_GROUP_LIKE": 21,
    "NOT_A_GROUP": 22,
    "ALGEBRA_MISMATCH": 23,
}


class AQGError(Exception):
    """Base error. ``code`` is one of the keys of ``EXIT_CODES``.

    ``report`` optionally carries the partial verification report that
    led to the failure, so callers can still print it.
    """

    def __init__(self, code, message="", report=None):
        if code not in EXIT_CODES:
            raise ValueError(f"unknown error code {code!r}")
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message
        self.report = report

    @property
    def exit_code(self):
        return EXIT_CODES[self.code]
