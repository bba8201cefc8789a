import sys

APP_VERSION = '1.0.0'

def client_main():
    from respdeg import client
    sys.exit(client.main())
