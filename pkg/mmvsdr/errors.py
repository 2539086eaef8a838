class MmvError(Exception):
    pass


class InvalidDataset(MmvError):
    pass


class NonFiniteValue(InvalidDataset):
    def __init__(self, row, column):
        self.row = row
        self.column = column
        msg = "Non-finite feature value at row {0}, column {1}".format(
            row, column)
        super(NonFiniteValue, self).__init__(msg)


class SingleClass(InvalidDataset):
    def __init__(self, n_classes=1):
        self.n_classes = n_classes
        msg = "At least 2 classes are required, got {0}".format(n_classes)
        super(SingleClass, self).__init__(msg)


class EmptyInput(InvalidDataset):
    pass


class EmptySample(InvalidDataset):
    pass


class EmptyClass(InvalidDataset):
    def __init__(self, class_id):
        self.class_id = class_id
        msg = "Class {0!r} has no observation".format(class_id)
        super(EmptyClass, self).__init__(msg)


class NotBinary(InvalidDataset):
    def __init__(self, n_classes):
        self.n_classes = n_classes
        msg = "Expected a two-class dataset, got {0} classes".format(
            n_classes)
        super(NotBinary, self).__init__(msg)


class DimensionMismatch(InvalidDataset):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        msg = "Dimension mismatch: expected {0}, got {1}".format(
            expected, got)
        super(DimensionMismatch, self).__init__(msg)


class ParseError(InvalidDataset):
    def __init__(self, path, row, column, value):
        self.path = path
        self.row = row
        self.column = column
        self.value = value
        msg = ("Could not parse {0!r} as a number in {1!r} "
               "(row {2}, column {3!r})".format(value, path, row, column))
        super(ParseError, self).__init__(msg)


class MissingLabelColumn(InvalidDataset):
    def __init__(self, path, label):
        self.path = path
        self.label = label
        msg = "Label column {0!r} not found in {1!r}".format(label, path)
        super(MissingLabelColumn, self).__init__(msg)


class InvalidConfiguration(MmvError):
    pass


class NonPositiveBandwidth(InvalidConfiguration):
    def __init__(self, bandwidth):
        self.bandwidth = bandwidth
        msg = "Bandwidth must be > 0, got {0!r}".format(bandwidth)
        super(NonPositiveBandwidth, self).__init__(msg)


class KeepOutOfRange(InvalidConfiguration):
    def __init__(self, keep, p):
        self.keep = keep
        self.p = p
        msg = "Cannot keep {0} features out of {1}".format(keep, p)
        super(KeepOutOfRange, self).__init__(msg)


class TooManyFolds(InvalidConfiguration):
    def __init__(self, folds, limit):
        self.folds = folds
        self.limit = limit
        msg = ("Cannot split into {0} folds: at most {1} folds are "
               "possible".format(folds, limit))
        super(TooManyFolds, self).__init__(msg)


class TooManyDirections(InvalidConfiguration):
    def __init__(self, d, p):
        self.d = d
        self.p = p
        msg = "Cannot extract {0} directions in dimension {1}".format(d, p)
        super(TooManyDirections, self).__init__(msg)


class KTooLarge(InvalidConfiguration):
    def __init__(self, k, n):
        self.k = k
        self.n = n
        msg = "k={0} neighbours requested with only {1} training " \
              "points".format(k, n)
        super(KTooLarge, self).__init__(msg)


class OddN(InvalidConfiguration):
    def __init__(self, n):
        self.n = n
        msg = "Model I requires an even sample size, got n={0}".format(n)
        super(OddN, self).__init__(msg)


class ZeroDirection(InvalidConfiguration):
    def __str__(self):
        if len(self.args) >= 1:
            return self.args[0]
        else:
            return "Projection direction has zero norm"


class InvalidModel(InvalidConfiguration):
    pass


class StepModeGradient(InvalidConfiguration):
    def __str__(self):
        if len(self.args) >= 1:
            return self.args[0]
        else:
            return ("MV gradient requested in step mode: use a smoothed "
                    "CDF mode")


class InfeasibleSubspace(InvalidConfiguration):
    def __init__(self, k, p):
        self.k = k
        self.p = p
        msg = ("No feasible direction left: {0} previous directions in "
               "dimension {1}".format(k, p))
        super(InfeasibleSubspace, self).__init__(msg)


class EstimationError(MmvError):
    pass


class DegenerateScores(EstimationError):
    def __str__(self):
        if len(self.args) >= 1:
            return self.args[0]
        else:
            return "Scores have zero variance"


class DegenerateCovariance(EstimationError):
    pass


class QuadratureFailure(EstimationError):
    def __init__(self, value, abserr, tolerance):
        self.value = value
        self.abserr = abserr
        self.tolerance = tolerance
        msg = ("Quadrature did not reach the requested accuracy: "
               "estimated error {0:g} > {1:g}".format(abserr, tolerance))
        super(QuadratureFailure, self).__init__(msg)


class RankDeficientPrev(EstimationError):
    def __init__(self, rank, k):
        self.rank = rank
        self.k = k
        msg = ("Previous directions are not linearly independent "
               "(rank {0} < {1})".format(rank, k))
        super(RankDeficientPrev, self).__init__(msg)
