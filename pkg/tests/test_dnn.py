import math

import numpy as np
import pytest

from camocodec.core.errors import ConfigError, DimensionError, FormatError, MagicMismatchError
from camocodec.core.messages import Activation, InitMode, Mode, OptimizerType
from camocodec.dataset.features import FeatureMatrix
from camocodec.dnn.model_io import load_history_csv, load_model, save_history_csv, save_model
from camocodec.dnn.network import DenseNet, TrainConfig, apply_max_norm, cross_entropy, evaluate, forward, \
    init_network, loss_and_grad, predict
from camocodec.dnn.optimizer import Optimizer, optimizer_step
from camocodec.dnn.trainer import TrainHistory, fit_model, train


def blobs(rng, n_per_class, centers, std):
    rows, labels = [], []
    for label, center in enumerate(centers):
        rows.append(rng.normal(center, std, size=(n_per_class, len(center))))
        labels += [label] * n_per_class
    return FeatureMatrix(np.vstack(rows), labels, ['c{}'.format(i) for i in range(len(centers))])


def numeric_grad(net, x, y, param, eps=1e-5):
    grad = np.zeros_like(param)
    for index in np.ndindex(param.shape):
        saved = param[index]
        param[index] = saved + eps
        plus, _ = loss_and_grad(net, x, y)
        param[index] = saved - eps
        minus, _ = loss_and_grad(net, x, y)
        param[index] = saved
        grad[index] = (plus - minus) / (2 * eps)
    return grad


def test_train_config_from_dict():
    cfg = TrainConfig.from_dict({'optimizer': 'sgd', 'activation': 'tanh', 'neurons': [8, 4], 'momentum': 0.9})
    assert cfg.optimizer is OptimizerType.SGD
    assert cfg.activation is Activation.TANH
    assert cfg.neurons == (8, 4)
    assert TrainConfig.from_dict(cfg.to_dict()) == cfg


@pytest.mark.parametrize('values', [
    {'activation': 'softplus'},
    {'epochs': -1},
    {'batch_size': 0},
    {'dropout_rate': 1.0},
    {'momentum': 1.0},
    {'learn_rate': -0.1},
    {'weight_constraint': 0.0},
    {'neurons': [4, 0]},
    {'hidden': [4]},
])
def test_train_config_rejects(values):
    with pytest.raises(ConfigError):
        TrainConfig.from_dict(values)


def test_init_bounds_and_zero_biases():
    net = init_network(TrainConfig(neurons=(4,)), 5, 3)
    assert net.layer_sizes == [5, 4, 3]
    assert np.all(np.abs(net.weights[0]) <= np.sqrt(6.0 / 9.0))
    assert np.all(np.abs(net.weights[1]) <= np.sqrt(6.0 / 7.0))
    assert all(not b.any() for b in net.biases)

    small = init_network(TrainConfig(neurons=(50,), init_mode=InitMode.UNIFORM_SMALL), 40, 3)
    assert np.all(np.abs(small.weights[0]) <= 0.05)
    normal = init_network(TrainConfig(neurons=(200,), init_mode=InitMode.NORMAL_SMALL), 100, 3)
    assert normal.weights[0].std() == pytest.approx(0.05, rel=0.05)


def test_init_is_seeded():
    a = init_network(TrainConfig(neurons=(6,), seed=4), 5, 2)
    b = init_network(TrainConfig(neurons=(6,), seed=4), 5, 2)
    c = init_network(TrainConfig(neurons=(6,), seed=5), 5, 2)
    np.testing.assert_array_equal(a.weights[0], b.weights[0])
    assert not np.array_equal(a.weights[0], c.weights[0])


def test_zero_output_layer_is_uniform(rng):
    net = init_network(TrainConfig(neurons=(4,)), 5, 3)
    net.weights[1][:] = 0.0
    x = rng.normal(size=(7, 5))
    probs, _ = forward(net, x)
    np.testing.assert_allclose(probs, 1.0 / 3.0, rtol=1e-12)
    loss, _ = loss_and_grad(net, x, [0, 1, 2, 0, 1, 2, 0])
    assert loss == pytest.approx(math.log(3.0))
    ids, _ = predict(net, x)
    assert not ids.any()


def test_forward_by_hand():
    net = DenseNet([np.array([[1.0, -1.0], [2.0, 0.0]]), np.eye(2)], [np.array([0.0, 1.0]), np.zeros(2)],
                   Activation.RELU)
    probs, cache = forward(net, np.array([[1.0, 2.0]]))
    np.testing.assert_allclose(cache.pre_activations[0], [[5.0, 0.0]])
    e = math.exp(5.0)
    np.testing.assert_allclose(probs, [[e / (e + 1), 1 / (e + 1)]], rtol=1e-12)


def test_softmax_is_shift_invariant(rng):
    net = init_network(TrainConfig(neurons=(4,)), 3, 3)
    x = rng.normal(size=(5, 3))
    before, _ = forward(net, x)
    net.biases[-1][:] += 1000.0
    after, _ = forward(net, x)
    np.testing.assert_allclose(after, before, rtol=1e-10)


def test_input_transform_applies_before_first_layer(rng):
    net = init_network(TrainConfig(neurons=(4,)), 3, 2)
    x = rng.normal(size=(5, 3))
    shift, scale = np.array([1.0, -2.0, 0.5]), np.array([2.0, 1.0, 4.0])
    expected, _ = forward(net, (x - shift) / scale)
    net.set_input_transform(shift, scale)
    actual, _ = forward(net, x)
    np.testing.assert_allclose(actual, expected)
    with pytest.raises(ConfigError):
        net.set_input_transform(shift, np.zeros(3))


def test_dropout_zero_matches_eval(rng):
    net = init_network(TrainConfig(neurons=(6, 4)), 3, 2)
    x = rng.normal(size=(5, 3))
    a, _ = forward(net, x, Mode.EVAL)
    b, _ = forward(net, x, Mode.TRAIN, dropout_rate=0.0, rng=0)
    np.testing.assert_array_equal(a, b)


def test_dropout_keeps_expectation(rng):
    net = init_network(TrainConfig(neurons=(4,), activation=Activation.SIGMOID), 3, 2)
    x = np.repeat(rng.normal(size=(1, 3)), 20000, axis=0)
    _, clean = forward(net, x[:1])
    _, noisy = forward(net, x, Mode.TRAIN, dropout_rate=0.2, rng=3)
    dropped = noisy.inputs[1]
    np.testing.assert_allclose(dropped.mean(axis=0), clean.inputs[1][0], rtol=0.03)
    assert np.mean(dropped == 0) == pytest.approx(0.2, abs=0.01)


def test_cross_entropy_floor():
    probs = np.array([[1.0, 0.0]])
    assert cross_entropy(probs, np.array([1])) == pytest.approx(-math.log(1e-12))


@pytest.mark.parametrize('activation', list(Activation))
def test_gradients_match_finite_differences(activation):
    for seed in range(10):
        gen = np.random.default_rng(seed)
        net = init_network(TrainConfig(neurons=(4,), activation=activation, seed=seed), 5, 3)
        for b in net.biases:
            b[:] = gen.normal(0.0, 0.1, size=b.shape)
        x = gen.normal(size=(6, 5))
        y = gen.integers(0, 3, size=6)
        _, grads = loss_and_grad(net, x, y)
        for param, grad in zip(net.parameters(), grads):
            np.testing.assert_allclose(grad, numeric_grad(net, x, y, param), rtol=1e-4, atol=1e-7)


def test_loss_rejects_bad_labels(rng):
    net = init_network(TrainConfig(neurons=(4,)), 3, 2)
    with pytest.raises(DimensionError):
        loss_and_grad(net, rng.normal(size=(2, 3)), [0, 2])
    with pytest.raises(DimensionError):
        loss_and_grad(net, rng.normal(size=(2, 3)), [0])
    with pytest.raises(DimensionError):
        forward(net, rng.normal(size=(2, 4)))


def test_sgd_momentum_steps():
    p, g = np.array([1.0]), np.array([0.5])
    opt = Optimizer(OptimizerType.SGD, 0.1, 0.5)
    opt.step([p], [g])
    assert p[0] == pytest.approx(0.95)
    opt.step([p], [g])
    assert p[0] == pytest.approx(0.875)
    assert opt.step_count == 2


def test_adam_first_step_moves_by_learn_rate():
    p = np.array([0.0, 0.0])
    Optimizer(OptimizerType.ADAM, 0.01).step([p], [np.array([3.0, -0.2])])
    np.testing.assert_allclose(p, [-0.01, 0.01], rtol=1e-6)


@pytest.mark.parametrize('kind', list(OptimizerType))
def test_zero_learn_rate_leaves_params(kind):
    p = np.array([1.0, -2.0])
    opt = Optimizer(kind, 0.0, 0.5 if kind is OptimizerType.SGD else 0.0)
    for _ in range(3):
        opt.step([p], [np.array([0.3, 0.7])])
    np.testing.assert_array_equal(p, [1.0, -2.0])


@pytest.mark.parametrize('kind', list(OptimizerType))
def test_optimizer_step_updates_every_param(kind):
    params = [np.array([1.0, 2.0]), np.array([[0.5]])]
    grads = [np.array([0.2, -0.4]), np.array([[1.0]])]
    expected = [p.copy() for p in params]
    Optimizer(kind, 0.05).step(expected, [g.copy() for g in grads])
    optimizer_step(Optimizer(kind, 0.05), params, grads)
    for p, e in zip(params, expected):
        np.testing.assert_array_equal(p, e)
    assert params[0][0] < 1.0 and params[0][1] > 2.0


def test_optimizer_rejects_shape_mismatch():
    with pytest.raises(DimensionError):
        Optimizer(OptimizerType.SGD, 0.1).step([np.zeros(2)], [np.zeros(3)])


def test_max_norm():
    w = np.array([[3.0, 1.0], [4.0, 0.0]])
    net = DenseNet([w], [np.zeros(2)], Activation.RELU)
    apply_max_norm(net, 2.0)
    np.testing.assert_allclose(net.weights[0], [[1.2, 1.0], [1.6, 0.0]])
    before = net.weights[0].copy()
    apply_max_norm(net, 2.0)
    np.testing.assert_allclose(net.weights[0], before, rtol=1e-12)
    with pytest.raises(ConfigError):
        apply_max_norm(net, 0.0)


def test_training_separates_blobs(rng):
    data = blobs(rng, 60, [(0.0, 8.0), (8.0, 0.0), (-8.0, -8.0)], 0.3)
    cfg = TrainConfig(neurons=(16,), epochs=30, batch_size=16, learn_rate=0.01, dropout_rate=0.0)
    net, history = fit_model(cfg, data, data)
    assert len(history) == 30
    assert history.train_acc[-1] == 1.0
    assert history.train_loss[-1] < history.train_loss[0]
    assert evaluate(net, data.rows, data.labels)[1] == 1.0


def test_training_with_constraint_keeps_norms(rng):
    data = blobs(rng, 20, [(0.0, 3.0), (3.0, 0.0)], 0.5)
    cfg = TrainConfig(neurons=(8,), epochs=5, batch_size=8, learn_rate=0.1, weight_constraint=0.5,
                      optimizer=OptimizerType.SGD, momentum=0.9)
    net, _ = fit_model(cfg, data)
    for w in net.weights:
        assert np.all(np.linalg.norm(w, axis=0) <= 0.5 + 1e-12)


def test_zero_epochs_returns_initial_copy(rng):
    data = blobs(rng, 5, [(0.0, 1.0), (1.0, 0.0)], 0.1)
    cfg = TrainConfig(neurons=(4,), epochs=0)
    initial = init_network(cfg, 2, 2)
    net, history = train(initial, cfg, data)
    assert len(history) == 0
    assert net is not initial
    np.testing.assert_array_equal(net.weights[0], initial.weights[0])


def test_training_is_deterministic(rng):
    data = blobs(rng, 15, [(0.0, 1.0), (1.0, 0.0), (1.0, 1.0)], 0.4)
    cfg = TrainConfig(neurons=(8,), epochs=4, batch_size=7, dropout_rate=0.3, seed=9)
    a, ha = fit_model(cfg, data, data)
    b, hb = fit_model(cfg, data, data)
    assert ha.metrics() == hb.metrics()
    for wa, wb in zip(a.parameters(), b.parameters()):
        np.testing.assert_array_equal(wa, wb)


def test_training_without_validation_records_nan(rng):
    data = blobs(rng, 5, [(0.0, 1.0), (1.0, 0.0)], 0.1)
    _, history = fit_model(TrainConfig(neurons=(4,), epochs=2), data)
    assert all(math.isnan(v) for v in history.val_acc)
    assert history.best_epoch() is None


def test_training_rejects_empty_set():
    cfg = TrainConfig(neurons=(4,), epochs=1)
    with pytest.raises(DimensionError):
        train(init_network(cfg, 3, 2), cfg, FeatureMatrix(np.zeros((0, 3)), [], ['a', 'b']))


def test_best_epoch_prefers_earliest():
    history = TrainHistory()
    for acc in (0.5, 0.9, float('nan'), 0.9, 0.7):
        history.append(1.0, 0.5, 1.0, acc, 0.1)
    assert history.best_epoch() == 2
    assert history.total_seconds == pytest.approx(0.5)


def test_model_file_round_trip(tmp_path, rng):
    net = init_network(TrainConfig(neurons=(5, 4), activation=Activation.TANH), 3, 2)
    net.set_input_transform(rng.normal(size=3), rng.uniform(0.5, 2.0, size=3))
    path = str(tmp_path / 'model.camn')
    save_model(net, path)
    loaded = load_model(path)
    assert loaded.layer_sizes == [3, 5, 4, 2]
    assert loaded.activation is Activation.TANH
    x = rng.normal(size=(4, 3))
    np.testing.assert_array_equal(forward(loaded, x)[0], forward(net, x)[0])

    again = str(tmp_path / 'again.camn')
    save_model(loaded, again)
    with open(path, 'rb') as f, open(again, 'rb') as g:
        assert f.read() == g.read()


def test_model_file_errors(tmp_path):
    path = str(tmp_path / 'model.camn')
    save_model(init_network(TrainConfig(neurons=(2,)), 2, 2), path)
    with open(path, 'rb') as f:
        data = f.read()
    with open(path, 'wb') as f:
        f.write(data + b'\x00')
    with pytest.raises(FormatError):
        load_model(path)
    with open(path, 'wb') as f:
        f.write(b'CAMF' + data[4:])
    with pytest.raises(MagicMismatchError):
        load_model(path)


def test_history_csv(tmp_path):
    history = TrainHistory()
    history.append(1.25, 0.5, 1.5, 0.25, 0.01)
    history.append(0.75, 0.75, 1.0, 0.5, 0.02)
    path = str(tmp_path / 'history.csv')
    save_history_csv(history, path)
    loaded = load_history_csv(path)
    assert loaded.metrics() == history.metrics()
    assert loaded.seconds == [0.01, 0.02]

    with open(path) as f:
        lines = f.read().splitlines()
    assert lines[0] == 'epoch,train_loss,train_acc,val_loss,val_acc,seconds'
    assert lines[1] == '1,1.25,0.5,1.5,0.25,0.01'


@pytest.mark.slow
def test_separates_high_dimensional_blobs():
    gen = np.random.default_rng(11)
    dim, scale = 1228, 6.0 / np.sqrt(2.0)
    centers = [scale * np.eye(dim)[k] for k in range(3)]
    train_set = blobs(gen, 300, centers, 1.0)
    val_set = blobs(gen, 100, centers, 1.0)
    cfg = TrainConfig(epochs=20, seed=5)
    net, history = fit_model(cfg, train_set, val_set)
    assert max(history.val_acc) >= 0.95
    again, _ = fit_model(cfg, train_set, val_set)
    for a, b in zip(net.parameters(), again.parameters()):
        np.testing.assert_array_equal(a, b)
