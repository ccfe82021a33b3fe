"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import copy
import typing
from dataclasses import dataclass, fields

import numpy as np
from scipy import special

from ..core.errors import ConfigError, DimensionError
from ..core.messages import Activation, InitMode, Mode, OptimizerType

# lower clamp of the true class probability inside the cross-entropy
PROB_FLOOR = 1e-12
SMALL_INIT_SCALE = 0.05


@dataclass(frozen=True)
class TrainConfig(object):

    """
        TrainConfig
        Hyperparameters of the dense classifier, one field per grid axis plus the seed
    """

    batch_size : int = 32
    epochs : int = 50
    optimizer : OptimizerType = OptimizerType.ADAM
    learn_rate : float = 1e-3
    momentum : float = 0.0
    init_mode : InitMode = InitMode.GLOROT_UNIFORM
    activation : Activation = Activation.RELU
    dropout_rate : float = 0.2
    weight_constraint : typing.Optional[float] = None
    neurons : typing.Tuple[int, ...] = (512, 128)
    seed : int = 0

    def validate(self) -> 'TrainConfig':
        if self.batch_size < 1:
            raise ConfigError('batch_size must be at least 1, got {}'.format(self.batch_size))
        if self.epochs < 0:
            raise ConfigError('epochs must be non-negative, got {}'.format(self.epochs))
        # lr 0 is accepted as a frozen reference configuration
        if not self.learn_rate >= 0:
            raise ConfigError('learn_rate must be non-negative, got {}'.format(self.learn_rate))
        if not 0 <= self.momentum < 1:
            raise ConfigError('momentum must lie in [0,1), got {}'.format(self.momentum))
        if not 0 <= self.dropout_rate < 1:
            raise ConfigError('dropout_rate must lie in [0,1), got {}'.format(self.dropout_rate))
        if self.weight_constraint is not None and not self.weight_constraint > 0:
            raise ConfigError('weight_constraint must be positive or none, got {}'.format(self.weight_constraint))
        if any(width < 1 for width in self.neurons):
            raise ConfigError('hidden layer widths must be positive, got {}'.format(list(self.neurons)))
        return self

    @staticmethod
    def from_dict(values : typing.Optional[dict]) -> 'TrainConfig':
        values = dict(values or {})
        known = {f.name for f in fields(TrainConfig)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError('unknown train options: {}'.format(sorted(unknown)))
        try:
            if 'optimizer' in values:
                values['optimizer'] = OptimizerType(values['optimizer'])
            if 'init_mode' in values:
                values['init_mode'] = InitMode(values['init_mode'])
            if 'activation' in values:
                values['activation'] = Activation(values['activation'])
        except ValueError as e:
            raise ConfigError(str(e)) from e
        if 'neurons' in values:
            values['neurons'] = tuple(int(width) for width in values['neurons'])
        return TrainConfig(**values).validate()

    def to_dict(self) -> dict:
        return {
            'batch_size': self.batch_size,
            'epochs': self.epochs,
            'optimizer': self.optimizer.value,
            'learn_rate': self.learn_rate,
            'momentum': self.momentum,
            'init_mode': self.init_mode.value,
            'activation': self.activation.value,
            'dropout_rate': self.dropout_rate,
            'weight_constraint': self.weight_constraint,
            'neurons': list(self.neurons),
            'seed': self.seed
        }


class DenseNet(object):

    """
        DenseNet
        Fully connected classifier. Layer l maps layer_sizes[l] -> layer_sizes[l+1]
        with x @ W + b. Hidden layers use one activation, the output is softmax.
        An optional input shift/scale standardizes rows before the first layer.
    """

    def __init__(self, weights : typing.List[np.ndarray], biases : typing.List[np.ndarray], activation : Activation,
                 input_shift : typing.Optional[np.ndarray] = None, input_scale : typing.Optional[np.ndarray] = None):
        if len(weights) < 1 or len(weights) != len(biases):
            raise DimensionError('need one bias per weight matrix and at least one layer')
        for l, (w, b) in enumerate(zip(weights, biases)):
            if w.ndim != 2 or b.shape != (w.shape[1],):
                raise DimensionError('layer {}: weight {} and bias {} do not match'.format(l, w.shape, b.shape))
            if l > 0 and weights[l - 1].shape[1] != w.shape[0]:
                raise DimensionError('layer {} expects {} inputs, previous layer gives {}'.format(
                    l, w.shape[0], weights[l - 1].shape[1]))
        self._weights = [np.asarray(w, dtype=np.float64) for w in weights]
        self._biases = [np.asarray(b, dtype=np.float64) for b in biases]
        self._activation = activation
        self._input_shift = None
        self._input_scale = None
        if input_shift is not None or input_scale is not None:
            self.set_input_transform(input_shift, input_scale)

    @property
    def weights(self) -> typing.List[np.ndarray]:
        return self._weights

    @property
    def biases(self) -> typing.List[np.ndarray]:
        return self._biases

    @property
    def activation(self) -> Activation:
        return self._activation

    @property
    def layer_sizes(self) -> typing.List[int]:
        return [self._weights[0].shape[0]] + [w.shape[1] for w in self._weights]

    @property
    def input_dim(self) -> int:
        return self._weights[0].shape[0]

    @property
    def n_classes(self) -> int:
        return self._weights[-1].shape[1]

    @property
    def input_shift(self) -> typing.Optional[np.ndarray]:
        return self._input_shift

    @property
    def input_scale(self) -> typing.Optional[np.ndarray]:
        return self._input_scale

    @property
    def has_input_transform(self) -> bool:
        return self._input_shift is not None

    def set_input_transform(self, shift : np.ndarray, scale : np.ndarray):
        shift = np.asarray(shift, dtype=np.float64)
        scale = np.asarray(scale, dtype=np.float64)
        if shift.shape != (self.input_dim,) or scale.shape != (self.input_dim,):
            raise DimensionError('input transform must have {} entries'.format(self.input_dim))
        if np.any(scale == 0):
            raise ConfigError('input scale must be non-zero')
        self._input_shift = shift
        self._input_scale = scale

    def parameters(self) -> typing.List[np.ndarray]:
        """
        Returns [W0, b0, W1, b1, ...], the arrays are updated in place by the optimizer
        """
        out = []
        for w, b in zip(self._weights, self._biases):
            out += [w, b]
        return out

    def copy(self) -> 'DenseNet':
        return copy.deepcopy(self)

    def to_string(self) -> str:
        return 'DenseNet {} activation={}'.format(self.layer_sizes, self._activation.value)


def activate(z : np.ndarray, activation : Activation) -> np.ndarray:
    if activation is Activation.RELU:
        return np.maximum(z, 0.0)
    if activation is Activation.TANH:
        return np.tanh(z)
    if activation is Activation.SIGMOID:
        return special.expit(z)
    return z


def activate_grad(z : np.ndarray, a : np.ndarray, activation : Activation) -> np.ndarray:
    """
    Derivative of the activation at pre-activation z with output a
    """
    if activation is Activation.RELU:
        return (z > 0).astype(np.float64)
    if activation is Activation.TANH:
        return 1.0 - a ** 2
    if activation is Activation.SIGMOID:
        return a * (1.0 - a)
    return np.ones_like(z)


def init_network(cfg : TrainConfig, input_dim : int, n_classes : int) -> DenseNet:
    """
    Draws the initial parameters, biases start at zero
    :param cfg: TrainConfig, uses neurons, init_mode, activation and seed
    :param input_dim: feature dimension
    :param n_classes: number of output units
    :return: DenseNet
    """
    cfg.validate()
    sizes = [input_dim] + list(cfg.neurons) + [n_classes]
    if any(size < 1 for size in sizes):
        raise ConfigError('zero width layer in {}'.format(sizes))

    rng = np.random.default_rng(cfg.seed)
    weights, biases = [], []
    for fan_in, fan_out in zip(sizes[:-1], sizes[1:]):
        if cfg.init_mode is InitMode.GLOROT_UNIFORM:
            bound = np.sqrt(6.0 / (fan_in + fan_out))
            w = rng.uniform(-bound, bound, size=(fan_in, fan_out))
        elif cfg.init_mode is InitMode.UNIFORM_SMALL:
            w = rng.uniform(-SMALL_INIT_SCALE, SMALL_INIT_SCALE, size=(fan_in, fan_out))
        else:
            w = rng.normal(0.0, SMALL_INIT_SCALE, size=(fan_in, fan_out))
        weights.append(w)
        biases.append(np.zeros(fan_out))
    return DenseNet(weights, biases, cfg.activation)


class ForwardCache(object):

    """
        ForwardCache
        Per layer inputs, pre-activations and dropout masks kept for backprop
    """

    def __init__(self):
        self.inputs = []
        self.pre_activations = []
        self.masks = []


def _input_rows(net : DenseNet, batch) -> np.ndarray:
    x = np.asarray(getattr(batch, 'rows', batch), dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != net.input_dim:
        raise DimensionError('batch of shape {} for a network with {} inputs'.format(x.shape, net.input_dim))
    if net.has_input_transform:
        x = (x - net.input_shift) / net.input_scale
    return x


def forward(net : DenseNet, batch, mode : Mode = Mode.EVAL, dropout_rate : float = 0.0,
            rng : typing.Union[None, int, np.random.Generator] = None) -> typing.Tuple[np.ndarray, ForwardCache]:
    """
    Evaluates the network on a batch
    :param net: DenseNet
    :param batch: (n, input_dim) rows
    :param mode: Mode.TRAIN applies inverted dropout to hidden activations
    :param dropout_rate: probability of dropping a hidden unit
    :param rng: generator or seed for the dropout masks
    :return: softmax probabilities (n, n_classes) and the backprop cache
    """
    a = _input_rows(net, batch)
    use_dropout = mode is Mode.TRAIN and dropout_rate > 0
    if use_dropout:
        rng = np.random.default_rng(rng)
    keep = 1.0 - dropout_rate

    cache = ForwardCache()
    last = len(net.weights) - 1
    for l, (w, b) in enumerate(zip(net.weights, net.biases)):
        cache.inputs.append(a)
        z = a @ w + b
        cache.pre_activations.append(z)
        if l == last:
            return special.softmax(z, axis=1), cache
        a = activate(z, net.activation)
        mask = None
        if use_dropout:
            mask = (rng.random(a.shape) < keep) / keep
            a = a * mask
        cache.masks.append(mask)


def cross_entropy(probs : np.ndarray, labels : np.ndarray) -> float:
    p = probs[np.arange(labels.size), labels]
    return float(-np.mean(np.log(np.maximum(p, PROB_FLOOR))))


def _check_labels(labels, n : int, n_classes : int) -> np.ndarray:
    labels = np.asarray(labels, dtype=np.int64).reshape(-1)
    if labels.size != n:
        raise DimensionError('{} labels for {} rows'.format(labels.size, n))
    if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
        raise DimensionError('labels must be class ids in [0, {})'.format(n_classes))
    return labels


def loss_and_grad(net : DenseNet, batch, labels, dropout_rate : float = 0.0,
                  rng : typing.Union[None, int, np.random.Generator] = None) \
        -> typing.Tuple[float, typing.List[np.ndarray]]:
    """
    Mean cross-entropy of the batch and its gradient
    :return: (loss, grads) with grads aligned to net.parameters()
    """
    mode = Mode.TRAIN if dropout_rate > 0 else Mode.EVAL
    probs, cache = forward(net, batch, mode, dropout_rate, rng)
    n = probs.shape[0]
    labels = _check_labels(labels, n, net.n_classes)
    if n == 0:
        raise DimensionError('cannot compute a loss on an empty batch')
    loss = cross_entropy(probs, labels)

    delta = probs.copy()
    delta[np.arange(n), labels] -= 1.0
    delta /= n

    grads = [None] * (2 * len(net.weights))
    for l in reversed(range(len(net.weights))):
        grads[2 * l] = cache.inputs[l].T @ delta
        grads[2 * l + 1] = delta.sum(axis=0)
        if l == 0:
            break
        upstream = delta @ net.weights[l].T
        mask = cache.masks[l - 1]
        if mask is not None:
            upstream = upstream * mask
        z = cache.pre_activations[l - 1]
        delta = upstream * activate_grad(z, activate(z, net.activation), net.activation)
    return loss, grads


def apply_max_norm(net : DenseNet, c : float) -> DenseNet:
    """
    Rescales every weight column (incoming weights of one unit) whose L2 norm exceeds c to norm c
    """
    if not c > 0:
        raise ConfigError('max-norm bound must be positive, got {}'.format(c))
    for w in net.weights:
        norms = np.linalg.norm(w, axis=0)
        over = norms > c
        if np.any(over):
            w[:, over] *= c / norms[over]
    return net


def predict(net : DenseNet, x) -> typing.Tuple[np.ndarray, np.ndarray]:
    """
    Class ids (argmax, lowest id on ties) and eval mode probabilities
    """
    probs, _ = forward(net, x, Mode.EVAL)
    return np.argmax(probs, axis=1), probs


def evaluate(net : DenseNet, x, labels) -> typing.Tuple[float, float]:
    """
    Eval mode (loss, accuracy), NaN for an empty set
    """
    probs, _ = forward(net, x, Mode.EVAL)
    labels = _check_labels(labels, probs.shape[0], net.n_classes)
    if labels.size == 0:
        return float('nan'), float('nan')
    return cross_entropy(probs, labels), float(np.mean(np.argmax(probs, axis=1) == labels))
