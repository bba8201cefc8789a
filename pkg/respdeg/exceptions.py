class RespdegError(Exception):
    pass

class ConfigurationError(RespdegError):
    pass


# Model errors. A single ModelError carries every diagnostic found.

class ModelError(RespdegError):
    def __init__(self, errors):
        self.errors = list(errors)
        super(ModelError, self).__init__('; '.join(str(e) for e in self.errors))

class ModelParseError(ModelError):
    pass

class ModelValidationError(ModelError):
    pass

class ModelFileError(ModelError):
    pass


class Diagnostic(RespdegError):
    pass

class ModelSyntaxError(Diagnostic):
    def __init__(self, line, column, expected):
        self.line = line
        self.column = column
        self.expected = expected
        super(ModelSyntaxError, self).__init__('syntax error at line {}, column {}: {}'.format(line, column, expected))

class SchemaError(Diagnostic):
    def __init__(self, path, message):
        self.path = path
        self.message = message
        super(SchemaError, self).__init__('schema error at {}: {}'.format(path, message))

class EmptyAvailableSet(Diagnostic):
    def __init__(self, state, agent):
        self.state = state
        self.agent = agent
        super(EmptyAvailableSet, self).__init__('no action available to agent `{}` at state `{}`'.format(agent, state))

class MissingTransition(Diagnostic):
    def __init__(self, state, profile):
        self.state = state
        self.profile = tuple(profile)
        super(MissingTransition, self).__init__('missing transition at state `{}` for profile ({})'.format(state, ','.join(self.profile)))

class DuplicateTransition(Diagnostic):
    def __init__(self, state, profile):
        self.state = state
        self.profile = tuple(profile)
        super(DuplicateTransition, self).__init__('duplicate transition at state `{}` for profile ({})'.format(state, ','.join(self.profile)))

class IncompleteProfile(Diagnostic):
    def __init__(self, state, profile):
        self.state = state
        self.profile = dict(profile)
        super(IncompleteProfile, self).__init__('transition at state `{}` does not assign an action to every agent: {}'.format(state, self.profile))

class UnknownName(Diagnostic):
    def __init__(self, kind, name):
        self.kind = kind
        self.name = name
        super(UnknownName, self).__init__('unknown {} `{}`'.format(kind, name))

class DuplicateName(Diagnostic):
    def __init__(self, kind, name):
        self.kind = kind
        self.name = name
        super(DuplicateName, self).__init__('duplicate {} `{}`'.format(kind, name))


# Query errors.

class QueryError(RespdegError):
    pass

class UnknownQueryName(QueryError, UnknownName):
    pass

class DuplicateMember(QueryError):
    def __init__(self, name):
        self.name = name
        super(DuplicateMember, self).__init__('`{}` is listed more than once'.format(name))

class UnavailableAction(QueryError, Diagnostic):
    def __init__(self, agent, action, state):
        self.agent = agent
        self.action = action
        self.state = state
        super(UnavailableAction, self).__init__('action `{}` is not available to agent `{}` at state `{}`'.format(action, agent, state))

class ReportTooLarge(QueryError):
    def __init__(self, agents, limit):
        self.agents = agents
        self.limit = limit
        super(ReportTooLarge, self).__init__('model has {} agents, report is limited to {} (use --force to override)'.format(agents, limit))

class BudgetExceeded(RespdegError):
    def __init__(self, count):
        self.count = count
        super(BudgetExceeded, self).__init__('instance too large for the oracle ({} candidates)'.format(count))

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
