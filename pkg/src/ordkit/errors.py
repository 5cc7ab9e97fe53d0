"""Domain errors raised by ordkit operations."""


class OrdkitError(ValueError):
    """Rejected input, tagged with the module and operation that refused it.

    The CLI renders these as ``ERR <module>.<op>: <message>`` with exit code 1.
    """

    def __init__(self, module: str, op: str, message: str):
        super().__init__(f"{module}.{op}: {message}")
        self.module = module
        self.op = op
        self.message = message
