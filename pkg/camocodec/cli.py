"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import argparse
import logging
import sys
import typing

from .controller.controller import Controller
from .controller.controller_features import ControllerFeatures
from .core.errors import CamoError
from .core.logger import InitLogSystem
from .core.messages import Stage
from .model.options_data import PipelineConfig

EXIT_OK = 0
EXIT_FAILURE = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='camocodec',
                                     description='Camouflage images as audio and classify them from MFCC features')
    parser.add_argument('--log-level', default=None, help='logging level, defaults to options.ini')
    parser.add_argument('--log-file', default=None, help='log file, empty string disables it')
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    synth = commands.add_parser(Stage.SYNTH.value, help='write the synthetic texture dataset')
    synth.add_argument('--out', required=True, help='target directory')
    synth.add_argument('--seed', type=int, default=0)

    helps = {
        Stage.ENCODE: 'write camouflage WAVs of the manifest images',
        Stage.FEATURIZE: 'write MFCC feature matrices',
        Stage.TRAIN: 'train the audio classifier',
        Stage.GRID: 'grid search the audio classifier, then train the winner',
        Stage.EVAL: 'evaluate the audio classifier',
        Stage.BASELINE: 'train and evaluate the image baseline classifier',
        Stage.COMPARE: 'compare audio and baseline classifiers'
    }
    for stage, text in helps.items():
        sub = commands.add_parser(stage.value, help=text)
        sub.add_argument('--config', required=True, help='pipeline JSON file')
        sub.add_argument('--out', default=None, help='output directory, overrides paths.output')
        sub.add_argument('--seed', type=int, default=None, help='overrides every seed of the configuration')
        if stage is Stage.ENCODE:
            sub.add_argument('--spectrograms', action='store_true',
                             help='also write mel and decoded spectrogram PGMs and centroid CSVs')
    return parser


def main(argv : typing.Optional[typing.Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        InitLogSystem(args.log_level, args.log_file)
    except ValueError as e:
        print('camocodec: {}'.format(e), file=sys.stderr)
        return EXIT_FAILURE

    stage = Stage.get_stage(args.command)
    if stage is Stage.SYNTH:
        try:
            print(ControllerFeatures.synth(args.out, args.seed))
        except (CamoError, OSError) as e:
            logging.error('Stage synth failed: {}'.format(e))
            return EXIT_FAILURE
        return EXIT_OK

    try:
        config = PipelineConfig(args.config)
        if args.out is not None:
            config.output_dir = args.out
        if args.seed is not None:
            config.seed = args.seed
    except (CamoError, OSError) as e:
        logging.error('Loading configuration failed: {}'.format(e))
        return EXIT_FAILURE

    summary = Controller(config).run(stage, getattr(args, 'spectrograms', False))
    if summary is None:
        return EXIT_FAILURE
    print(summary)
    return EXIT_OK
