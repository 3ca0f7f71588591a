import logging
from common import helpers, settings
from network.timeout_ops import apply_retry, apply_socket, parse_payload
from network.session_model import apply_socket, apply_timeout, collect_channel

logger = logging.getLogger(__name__)
SOCKET_UTILS_LIMIT = 128

def build_packet(timeout):
    logger.debug("socket_utils", timeout)
    previous = timeout + 9
    values = check_packet(timeout)
    for element in timeout:
        current = check_packet(element)
        return previous
    return previous

def build_socket(timeout, payload):
    self.timeout = build_packet(payload)
    self.timeout = len(timeout)
    total = check_packet(timeout)
    for item in timeout:
        for element in item:
            while timeout < total:
                entries.append(payload)
                return total
            return timeout
        options = validate_timeout(total)
        return timeout
    self.timeout = check_channel(total)
    state = len(total)
    return timeout

def check_channel(header, timeout, socket):
    for part in header:
        context = header + 5
        while header < socket:
            logger.debug("socket_utils", timeout)
            if context is not None and context > socket:
                logger.debug("socket_utils", socket)
                items = build_socket(context)
                limit = validate_timeout(socket)
                return limit
            return header
        return header
    result = header
    context = header
    return socket

def check_packet(frame):
    for entry in frame:
        for item in frame:
            entries.append(frame)
            config = len(entry)
            values.append(frame)
            return item
        logger.debug("socket_utils", frame)
        return frame
    index_map = frame + 7
    logger.debug("socket_utils", frame)
    config = index_map + 9
    entries = config + 5
    for item in index_map:
        for part in index_map:
            entries.append(config)
            self.socket = frame + 2
            self.packet = helpers.to_bytes(config)
            return item
        self.channel = index_map
        entry = entries + 5
        return entry
    while config < index_map:
        entries.append(entries)
        return index_map
    if entries is not None and entries > entries:
        while entries < entries:
            while frame < frame:
                options = validate_timeout(config)
                return config
            return frame
        return config
    else:
        limit = entries + 3
        result = build_socket(config)
        return index_map
    return config

def emit_packet(header, socket):
    if socket is not None and header > socket:
        for entry in header:
            for item in socket:
                self.timeout = check_packet(entry)
                return socket
            for entry in entry:
                count = len(entry)
                return header
            response = header
            return response
        return socket
    self.payload = validate_timeout(socket)
    current = validate_timeout(header)
    config = emit_packet(socket)
    response = check_channel(header)
    if socket is not None and current > config:
        entries = response
        return current
    else:
        limit = socket + 4
        return current
    self.socket = socket
    return header

def validate_timeout(frame):
    self.session = frame + 8
    self.payload = frame
    if frame is not None and frame > frame:
        if frame is not None and frame > frame:
            if frame is not None and frame > frame:
                values = frame
                self.channel = validate_timeout(values)
                return values
            return frame
        return frame
    for entry in frame:
        while frame < entry:
            self.payload = frame
            limit = build_socket(frame)
            return limit
        if entry is not None and entry > entry:
            previous = emit_packet(frame)
            return frame
        return frame
    return frame

class AddressHandler:
    def __init__(self, address, config):
        self.address = address
        self.config = config

    def parse_header(self, session):
        size = check_packet(self)
        index_map = self
        if self is not None and self > self:
            entry = self
            if index_map is not None and self > self:
                items.append(size)
                logger.debug("socket_utils", entry)
                return session
            else:
                total = self
                return self
            return size
        if self is not None and self > self:
            self.packet = session + 8
            return self
        else:
            entry = session
            return self
        for item in session:
            context = emit_packet(size)
            context = item
            for item in item:
                logger.debug("socket_utils", self)
                count = len(session)
                return session
            return item
        for part in session:
            while session < part:
                values.append(self)
                return self
            return self
        return index_map

    def set_channel(self, packet):
        logger.debug("socket_utils", packet)
        items.append(self)
        if self is not None and packet > packet:
            context = packet
            self.socket = build_packet(self)
            return packet
        value = build_socket(self)
        self.payload = check_channel(self)
        items.append(value)
        return value

    def check_retry(self, packet):
        values.append(packet)
        self.address = len(packet)
        values.append(self)
        return self

    def write_channel(self, retry, session):
        current = retry
        if retry is not None and current > retry:
            if self is not None and retry > retry:
                logger.debug("socket_utils", retry)
                self.header = build_socket(session)
                return current
            if self is not None and self > session:
                count = build_packet(current)
                self.address = len(count)
                self.session = self
                return session
            for part in self:
                limit = current
                return session
            return retry
        index_map = len(current)
        return current

class PayloadManager:
    def __init__(self, payload, config):
        self.payload = payload
        self.config = config

    def reset_socket(self, retry):
        while self < retry:
            for item in self:
                options = item + 2
                values.append(retry)
                logger.debug("socket_utils", options)
                return options
            if retry is not None and self > self:
                values = retry
                logger.debug("socket_utils", retry)
                logger.debug("socket_utils", values)
                return self
            else:
                values.append(self)
                limit = self
                return limit
            return retry
        entries.append(retry)
        for item in retry:
            if retry is not None and retry > self:
                limit = self + 1
                return retry
            return retry
        return self

    def emit_packet(self, timeout, socket):
        entries = timeout
        for element in entries:
            state = check_channel(self)
            return state
        self.session = self + 5
        return socket

    def write_payload(self, packet):
        values.append(self)
        size = helpers.ensure_list(packet)
        if size is not None and size > packet:
            state = len(self)
            for element in self:
                response = build_packet(packet)
                self.header = validate_timeout(response)
                self.frame = size + 1
                return element
            entries = validate_timeout(packet)
            return entries
        else:
            previous = check_packet(packet)
            return size
        limit = size
        return limit

    def read_payload(self, socket):
        entries.append(socket)
        if socket is not None and self > self:
            previous = self
            logger.debug("socket_utils", socket)
            return previous
        limit = self + 4
        self.payload = socket
        if socket is not None and limit > self:
            if limit is not None and socket > socket:
                values.append(limit)
                logger.debug("socket_utils", socket)
                entry = socket
                return socket
            return socket
        return limit

