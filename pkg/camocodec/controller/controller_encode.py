"""
    MIT License

    Copyright (c) 2026 The camocodec authors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software, to deal in the Software without restriction, subject to
    the conditions stated in the LICENSE file distributed with this package.
"""

import csv
import logging
import os
import time

import numpy as np

from ..dataset.features import extract_rows, load_gray
from ..dataset.manifest import ManifestEntry, load_manifest
from ..dsp.centroid import centroid_track
from ..dsp.mel import mel_spectrogram
from ..dsp.spectrogram import stft
from ..model.options_data import PipelineConfig
from ..model.output_layout import OutputLayout
from ..raster.pnm import write_gray_pgm
from ..sonify.encoder import correlation, decode_spectrogram, encode_image
from ..sonify.wav import write_wav

from typing import TYPE_CHECKING
if TYPE_CHECKING:
    from .controller import Controller
else:
    from typing import Any as Controller


def save_centroid_csv(track : np.ndarray, hop_seconds : float, filepath : str):
    os.makedirs(os.path.dirname(os.path.abspath(filepath)), exist_ok=True)
    with open(filepath, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(['frame', 'seconds', 'centroid_hz'])
        for i, value in enumerate(track):
            writer.writerow([i, repr(i * hop_seconds), repr(float(value))])


class ControllerEncode(object):

    """
        ControllerEncode
        Writes the camouflage WAV of every manifest image and, on request,
        its mel spectrogram, decoded spectrogram and centroid track.
    """

    def __init__(self, parent : Controller, config : PipelineConfig, layout : OutputLayout):
        self._controller_main = parent
        self._config = config
        self._layout = layout

    def encode(self, spectrograms : bool = False) -> str:
        """
        :param spectrograms: also write mel/decoded PGMs and centroid CSVs
        :return: summary line
        """
        start = time.time()
        manifest = load_manifest(self._config.manifest_path)
        cfg = self._config.encode
        mfcc_cfg = self._config.mfcc
        layout = self._layout
        seed = self._config.seed

        def run(entry : ManifestEntry) -> np.ndarray:
            gray = load_gray(entry, cfg.rows, cfg.cols)
            clip = encode_image(gray, cfg, seed)
            write_wav(clip, layout.wav(entry.label, entry.stem))
            if not spectrograms:
                return np.zeros(1)
            write_gray_pgm(mel_spectrogram(clip, mfcc_cfg).to_gray(), layout.mel_pgm(entry.label, entry.stem))
            decoded = decode_spectrogram(clip, cfg)
            write_gray_pgm(decoded, layout.decoded_pgm(entry.label, entry.stem))
            track = centroid_track(stft(clip, mfcc_cfg.n_fft, mfcc_cfg.hop))
            save_centroid_csv(track, mfcc_cfg.hop / clip.sample_rate, layout.centroid_csv(entry.label, entry.stem))
            return np.array([correlation(gray.values, decoded.values)])

        results = extract_rows(manifest.entries, run, self._config.workers)
        if spectrograms and results:
            logging.info('mean source/decoded correlation {:.4f}'.format(float(np.mean(results))))
        logging.info('encoded {} images in: {:.3}s'.format(len(manifest), time.time() - start))
        return 'encoded {} clips into {}'.format(len(manifest), os.path.join(layout.root, 'audio'))
