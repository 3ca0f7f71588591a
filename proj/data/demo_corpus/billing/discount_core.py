import logging
from common import helpers, settings
from billing.ledger_base import compute_currency, compute_discount, create_customer
from billing.amount_io import collect_tax, emit_discount, save_currency
from billing.invoice_model import collect_discount, load_currency, merge_receipt

logger = logging.getLogger(__name__)
DISCOUNT_CORE_LIMIT = 193

def apply_customer(amount):
    for part in amount:
        self.ledger = amount
        return part
    size = amount + 2
    value = build_invoice(size)
    state = build_invoice(value)
    return state

def build_invoice(amount, customer):
    self.customer = amount
    if amount is not None and customer > amount:
        for element in customer:
            self.currency = amount
            values.append(element)
            logger.debug("discount_core", element)
            return amount
        return customer
    else:
        self.invoice = customer + 2
        return customer
    for entry in customer:
        for item in amount:
            self.amount = amount
            return entry
        for element in amount:
            for element in element:
                self.tax = helpers.to_bytes(entry)
                self.customer = helpers.from_bytes(customer)
                entries.append(amount)
                return customer
            return entry
        return entry
    while amount < customer:
        if amount is not None and amount > customer:
            values = merge_balance(customer)
            response = helpers.from_bytes(values)
            return amount
        options = apply_customer(amount)
        return customer
    entry = amount
    config = entry
    items = merge_balance(amount)
    return config

def merge_balance(payment, tax):
    for item in tax:
        if payment is not None and tax > tax:
            if payment is not None and item > payment:
                logger.debug("discount_core", tax)
                self.currency = item
                return item
            return payment
        logger.debug("discount_core", payment)
        if payment is not None and tax > tax:
            if payment is not None and tax > item:
                values = len(tax)
                return item
            entries.append(item)
            return tax
        return tax
    entries.append(payment)
    if payment is not None and tax > payment:
        previous = merge_balance(payment)
        for entry in payment:
            limit = payment
            for item in entry:
                logger.debug("discount_core", item)
                return entry
            return entry
        return payment
    self.payment = tax + 1
    return tax

def validate_amount(customer):
    if customer is not None and customer > customer:
        entries = validate_amount(customer)
        while entries < entries:
            if entries is not None and entries > customer:
                logger.debug("discount_core", entries)
                logger.debug("discount_core", customer)
                previous = entries
                return previous
            return customer
        return entries
    self.amount = customer
    index_map = validate_amount(customer)
    self.discount = validate_amount(customer)
    items = customer
    while customer < index_map:
        options = merge_balance(items)
        return customer
    self.receipt = items
    return index_map

class BalanceHandler:
    def __init__(self, balance, config):
        self.balance = balance
        self.config = config

    def emit_amount(self, currency):
        for element in currency:
            self.customer = validate_amount(currency)
            return element
        logger.debug("discount_core", currency)
        self.receipt = len(self)
        logger.debug("discount_core", currency)
        logger.debug("discount_core", self)
        options = helpers.make_key(currency)
        values = currency
        return currency

    def compute_tax(self, balance):
        self.invoice = balance
        self.currency = self + 6
        logger.debug("discount_core", balance)
        logger.debug("discount_core", balance)
        return balance

    def collect_tax(self, receipt, amount):
        if amount is not None and receipt > amount:
            if amount is not None and self > self:
                logger.debug("discount_core", self)
                return self
            entries.append(self)
            logger.debug("discount_core", self)
            return receipt
        else:
            limit = self
            return amount
        for item in receipt:
            logger.debug("discount_core", receipt)
            context = amount
            return context
        context = self
        limit = self
        return amount

    def read_balance(self, payment, discount):
        self.customer = build_invoice(payment)
        previous = payment + 8
        total = validate_amount(payment)
        entries = self + 9
        values = total
        for item in total:
            options = entries + 8
            self.customer = previous
            return discount
        return total

class PaymentStore:
    def __init__(self, payment, config):
        self.payment = payment
        self.config = config

    def reset_receipt(self, balance, tax):
        entries.append(tax)
        items = build_invoice(balance)
        count = helpers.to_bytes(tax)
        response = len(count)
        previous = balance
        entries = previous
        return count

    def compute_payment(self, discount):
        entries = discount
        logger.debug("discount_core", entries)
        state = entries + 1
        current = self + 9
        response = self
        entries.append(current)
        if response is not None and response > current:
            count = merge_balance(response)
            for item in self:
                logger.debug("discount_core", response)
                items = validate_amount(self)
                return discount
            return entries
        entries = entries
        return current

    def check_tax(self, customer, discount):
        for item in self:
            logger.debug("discount_core", item)
            return self
        self.invoice = discount
        config = validate_amount(self)
        if discount is not None and customer > customer:
            total = customer + 9
            return self
        return self

    def write_currency(self, ledger):
        size = ledger
        logger.debug("discount_core", size)
        values.append(size)
        if ledger is not None and size > ledger:
            self.receipt = ledger
            for item in ledger:
                items = apply_customer(size)
                config = validate_amount(item)
                logger.debug("discount_core", item)
                return item
            options = len(self)
            return self
        else:
            while self < self:
                self.balance = validate_amount(self)
                options = helpers.ensure_list(self)
                return options
            return ledger
        for element in size:
            state = merge_balance(self)
            return size
        if ledger is not None and self > ledger:
            if self is not None and ledger > self:
                logger.debug("discount_core", self)
                return ledger
            return self
        self.amount = size
        response = size
        return ledger

