class DesignError(ValueError):
    # Inadmissible STS order or malformed triple.
    pass


class HypertreeError(ValueError):
    # Invalid hypertree / graph tree, or an annotation that cannot be built.
    pass


class ConfigError(ValueError):
    pass


class PreconditionError(ValueError):
    # Raised by the embed gate before any work is done.
    pass


class SizeLimitExceeded(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}".strip())
        self.path = path
        self.line = line


class PipelineRetry(RuntimeError):
    """
    Recoverable stage failure. The embed pipeline answers it by drawing a
    new reservoir; anything else that sees it should treat it as a failure.
    """

    def __init__(self, stage, detail):
        super().__init__(f"{stage}: {detail}")
        self.stage = stage
        self.detail = detail


class PackingShortfall(PipelineRetry):
    def __init__(self, detail):
        super().__init__("pack_forest", detail)


class StarStarvation(PipelineRetry):
    def __init__(self, detail):
        super().__init__("attach_stars", detail)


class SupplyShortfall(RuntimeError):
    pass


class DanglingReference(RuntimeError):
    pass
