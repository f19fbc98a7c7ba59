from lamkernel.main import main
import os
import signal
import sys


def signal_handler(sig, frame):
    print('Interrupted, shutting down...', file=sys.stderr)
    os._exit(130)


if __name__ == '__main__':
    # Register signal handlers
    signal.signal(signal.SIGINT, signal_handler)
    signal.signal(signal.SIGTERM, signal_handler)

    sys.exit(main(sys.argv[1:]))
