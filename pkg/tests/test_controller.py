import json
import os

import numpy as np
import pytest

from camocodec import cli
from camocodec.controller.controller import Controller
from camocodec.core.errors import ConfigError
from camocodec.core.messages import Activation, OptimizerType, Split, Stage
from camocodec.dnn.model_io import load_history_csv
from camocodec.metrics.confusion import load_confusion_csv
from camocodec.model.options_data import PipelineConfig
from camocodec.model.output_layout import AUDIO_MODEL, BASELINE_MODEL, OutputLayout

from conftest import file_bytes, listing

SMALL_TRAIN = {'epochs': 2, 'neurons': [8], 'batch_size': 4, 'dropout_rate': 0.0}


def write_config(path, document):
    with open(path, 'w') as f:
        json.dump(document, f)
    return str(path)


@pytest.fixture
def toy_config(tmp_path, toy_manifest):
    return write_config(tmp_path / 'pipeline.json', {
        'encode': {'rows': 32, 'cols': 64},
        'train': SMALL_TRAIN,
        'grid': {'learn_rate': [0.01, 0.001]},
        'baseline': {'height': 8, 'width': 8, 'train': SMALL_TRAIN},
        'paths': {'manifest': 'manifest.csv', 'output': 'out'},
        'seed': 3
    })


def test_config_defaults():
    config = PipelineConfig()
    assert config.encode.rows == 128
    assert config.mfcc.target_dim == 1228
    assert config.train.optimizer is OptimizerType.ADAM
    assert config.train.neurons == (512, 128)
    assert config.baseline.height == 64
    assert config.grid == {'learn_rate': [0.001, 0.0001], 'dropout_rate': [0.0, 0.2]}
    assert config.seed == 0 and config.workers == 1


def test_config_overrides_merge_sectionwise(tmp_path):
    path = write_config(tmp_path / 'c.json', {
        'train': {'activation': 'tanh'},
        'grid': {'momentum': [0.0]},
        'baseline': {'train': {'epochs': 3}},
        'paths': {'output': '/abs/out'}
    })
    config = PipelineConfig(path)
    assert config.train.activation is Activation.TANH
    assert config.train.epochs == 50
    assert config.grid == {'momentum': [0.0]}
    assert config.baseline.train.epochs == 3
    assert config.baseline.width == 64
    assert config.output_dir == '/abs/out'
    assert config.manifest_path == os.path.join(str(tmp_path), 'manifest.csv')


def test_config_seed_and_output_overrides(tmp_path):
    config = PipelineConfig(document={'seed': 1})
    config.seed = 7
    assert config.seed == 7
    assert config.train.seed == 7
    assert config.baseline.train.seed == 7
    config.output_dir = str(tmp_path / 'elsewhere')
    assert config.output_dir == str(tmp_path / 'elsewhere')


def test_config_round_trip(tmp_path):
    config = PipelineConfig(document={'train': {'neurons': [16]}, 'workers': 2})
    path = str(tmp_path / 'saved.json')
    config.save(path)
    assert PipelineConfig(path).to_dict() == config.to_dict()


@pytest.mark.parametrize('document', [
    {'network': {}},
    {'train': {'optimizer': 'rmsprop'}},
    {'encode': {'rows': 1}},
    {'paths': {'data': 'x'}},
    {'workers': 0},
    {'seed': 'abc'},
    {'grid': [1, 2]},
])
def test_config_rejects(document):
    with pytest.raises(ConfigError):
        PipelineConfig(document=document)


def test_config_file_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        PipelineConfig(str(tmp_path / 'missing.json'))
    bad = tmp_path / 'bad.json'
    bad.write_text('{"seed": ')
    with pytest.raises(ConfigError):
        PipelineConfig(str(bad))


def test_output_layout(tmp_path):
    layout = OutputLayout(str(tmp_path))
    assert layout.features(Split.VAL) == os.path.join(str(tmp_path), 'features', 'val.camf')
    assert layout.model(AUDIO_MODEL).endswith(os.path.join('models', 'audio.camn'))
    assert layout.wav('army_base', 'a0').endswith(os.path.join('audio', 'army_base', 'a0.wav'))


def test_pipeline_stages(toy_config, tmp_path):
    config = PipelineConfig(toy_config)
    controller = Controller(config)
    for stage in (Stage.ENCODE, Stage.FEATURIZE, Stage.TRAIN, Stage.GRID, Stage.EVAL, Stage.BASELINE):
        assert controller.run(stage, spectrograms=True) is not None

    summary = controller.run(Stage.COMPARE)
    assert 'times faster than the baseline' in summary

    files = listing(str(tmp_path / 'out'))
    for name in ['audio/army_base/a0.wav', 'spectrograms/desert_road/c1.mel.pgm',
                 'spectrograms/desert_road/c1.decoded.pgm', 'spectrograms/bamboo_forest/b0.centroid.csv',
                 'features/train.camf', 'features/val.camf', 'models/audio.camn', 'models/baseline.camn',
                 'reports/audio_history.csv', 'reports/audio_timing.csv', 'reports/audio_report.txt',
                 'reports/audio_confusion.csv', 'reports/baseline_confusion.csv', 'reports/grid_search.csv',
                 'reports/class_balance.csv', 'reports/comparison.txt', 'reports/comparison.csv',
                 'curves/audio_roc_army_base.csv', 'curves/audio_pr_desert_road.csv',
                 'pca/audio_pca2.csv', 'pca/audio_pca3.csv', 'pca/baseline_pca2.csv']:
        assert name in files
    # bamboo_forest has no validation sample
    assert 'curves/audio_roc_bamboo_forest.csv' not in files

    names, cm = load_confusion_csv(str(tmp_path / 'out' / 'reports' / 'audio_confusion.csv'))
    assert names == ['army_base', 'bamboo_forest', 'desert_road']
    assert cm.total == 2

    with open(str(tmp_path / 'out' / 'reports' / 'audio_history.csv')) as f:
        lines = f.read().splitlines()
    assert lines[0] == 'epoch,train_loss,train_acc,val_loss,val_acc,seconds'
    assert len(lines) > 1
    for epoch, line in enumerate(lines[1:], 1):
        fields = line.split(',')
        assert int(fields[0]) == epoch
        assert len(fields) == 6 and float(fields[5]) >= 0.0


def test_stage_failures_return_none(toy_config):
    controller = Controller(PipelineConfig(toy_config))
    assert controller.run(Stage.EVAL) is None
    assert controller.run(Stage.COMPARE) is None
    assert controller.run(Stage.SYNTH) is None


def test_cli_exit_codes(toy_config, tmp_path):
    assert cli.main(['--log-file', '', 'featurize', '--config', toy_config]) == cli.EXIT_OK
    assert cli.main(['--log-file', '', 'eval', '--config', toy_config]) == cli.EXIT_FAILURE
    assert cli.main(['--log-file', '', 'train', '--config', str(tmp_path / 'none.json')]) == cli.EXIT_FAILURE
    assert cli.main(['--log-file', '', '--log-level', 'loud', 'train', '--config', toy_config]) == cli.EXIT_FAILURE
    with pytest.raises(SystemExit):
        cli.main([])
    with pytest.raises(SystemExit):
        cli.main(['train'])


def test_cli_out_override(toy_config, tmp_path):
    out = tmp_path / 'override'
    assert cli.main(['--log-file', '', 'featurize', '--config', toy_config, '--out', str(out)]) == cli.EXIT_OK
    assert os.path.isfile(str(out / 'features' / 'train.camf'))
    assert not os.path.exists(str(tmp_path / 'out'))


def run_pipeline(config, out):
    args = ['--log-file', '', '--log-level', 'WARNING']
    for stage in ('encode', 'featurize', 'train', 'eval', 'baseline', 'compare'):
        extra = ['--spectrograms'] if stage == 'encode' else []
        assert cli.main(args + [stage, '--config', config, '--out', out] + extra) == cli.EXIT_OK


@pytest.mark.slow
def test_end_to_end_synthetic_textures(tmp_path):
    data = str(tmp_path / 'data')
    assert cli.main(['--log-file', '', 'synth', '--out', data, '--seed', '0']) == cli.EXIT_OK
    config = os.path.join(data, 'pipeline.json')
    assert os.path.isfile(config)

    first, second = str(tmp_path / 'run1'), str(tmp_path / 'run2')
    run_pipeline(config, first)
    run_pipeline(config, second)

    _, cm = load_confusion_csv(os.path.join(first, 'reports', 'audio_confusion.csv'))
    assert cm.total == 60
    assert cm.trace / cm.total >= 0.7

    for name in ('audio_history.csv', 'baseline_history.csv'):
        runs = [load_history_csv(os.path.join(out, 'reports', name)) for out in (first, second)]
        assert runs[0].metrics() == runs[1].metrics()
    for name in ('audio_confusion.csv', 'audio_pca2.csv'):
        folder = 'pca' if name.startswith('audio_pca') else 'reports'
        assert file_bytes(os.path.join(first, folder, name)) == file_bytes(os.path.join(second, folder, name))
    assert file_bytes(os.path.join(first, 'features', 'train.camf')) == \
        file_bytes(os.path.join(second, 'features', 'train.camf'))
    assert file_bytes(os.path.join(first, 'models', 'audio.camn')) == \
        file_bytes(os.path.join(second, 'models', 'audio.camn'))
    wav = os.path.join('audio', 'vertical_bands', 'vertical_bands_val_003.wav')
    assert file_bytes(os.path.join(first, wav)) == file_bytes(os.path.join(second, wav))
    assert len([f for f in listing(first) if f.endswith('.wav')]) == 240
    assert os.path.isfile(os.path.join(first, 'reports', 'comparison.csv'))
    assert np.isfinite(load_history_csv(os.path.join(first, 'reports', 'audio_history.csv')).train_loss).all()
